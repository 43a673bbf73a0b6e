#include "cuspg2/suite.hpp"

#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include "cuspg2/binform.hpp"
#include "cuspg2/diffpoly.hpp"
#include "cuspg2/errors.hpp"
#include "cuspg2/exterior.hpp"
#include "cuspg2/g2verify.hpp"
#include "cuspg2/liealg.hpp"
#include "cuspg2/reference.hpp"

namespace cuspg2::suite {

namespace {

using nlohmann::ordered_json;
using report::check;
using report::recorded;
using Form = binform::BinaryForm<Rational>;
using diffpoly::ExtendedJetFunction;
using diffpoly::jet;
using diffpoly::JetFunction;
using diffpoly::kKappa;
using diffpoly::kX;

const Rational& cubic_kappa() {
  static const Rational k = ratio(6751269, 400);
  return k;
}

std::string str(const Rational& q) { return cuspg2::to_string(q); }
std::string str(const AlgebraicScalar& a) { return a.to_string(); }
std::string str(std::pair<int, int> s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}
std::string str(std::pair<long, long> s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

JetFunction J(const char* text) { return diffpoly::parse_jet_expression(text); }

/// Symmetric matrix as a quadratic form in the given generator names.
template <std::size_t N>
std::string quadratic_to_string(const std::array<std::array<AlgebraicScalar, N>, N>& g,
                                const std::array<std::string, N>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      const AlgebraicScalar c = a == b ? g[a][b] : AlgebraicScalar(g[a][b] * AlgebraicScalar(2));
      if (c.is_zero()) continue;
      os << (first ? "" : " + ") << (c.is_rational() ? str(c) : "(" + str(c) + ")") << '*' << names[a] << '*'
         << names[b];
      first = false;
    }
  return first ? "0" : os.str();
}

std::array<std::string, 8> theta_names() {
  std::array<std::string, 8> names;
  for (int k = 0; k < 8; ++k) names[k] = "th" + std::to_string(k + 1);
  return names;
}

ordered_json jets_json(const wilczynski::JetPoint& jets) {
  ordered_json j = ordered_json::object();
  for (const auto& [v, value] : jets) j[diffpoly::variable_name(v)] = str(value);
  return j;
}

ordered_json matrix_json(const wilczynski::Matrix3Q& m) {
  ordered_json j = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(str(x));
    j.push_back(r);
  }
  return j;
}

Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return ratio(num(rng), den(rng));
}

Form random_sextic(std::mt19937_64& rng) {
  std::vector<Rational> v(7);
  for (auto& x : v) x = random_rational(rng);
  return Form(v);
}

std::string count_str(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

InvariantReport count_check(std::string name, int ok, int total, ordered_json details = ordered_json::object()) {
  return check(std::move(name), count_str(ok, total), count_str(total, total), ok == total, std::move(details));
}

// ---------------------------------------------------------------------------------------------
// Shared pipeline pieces.

struct G2Pipeline {
  exterior::StructureConstants sc;
  orbit::CoframeSextic sextic;
  std::array<std::array<AlgebraicScalar, 8>, 8> metric;
  exterior::ExteriorForm phi{3};
};

G2Pipeline build_pipeline() {
  const auto frame = liealg::su21_frame();
  G2Pipeline p{liealg::extract_structure_constants(frame), orbit::family_sextic(2, 3).form, {}, exterior::ExteriorForm(3)};
  const auto dict = orbit::su21_dictionary(frame);
  p.metric = orbit::realize_metric(orbit::metric_from_sextic(p.sextic), dict);
  p.phi = orbit::realize_form(orbit::threeform_from_sextic(p.sextic), dict);
  return p;
}

void structure_checks(report::Recorder& rec, const G2Pipeline& p) {
  rec.add(check("structure constants antisymmetric", "true", "true", p.sc.is_antisymmetric()));
  rec.add(check("Jacobi identity", "true", "true", p.sc.satisfies_jacobi()));
  const auto expected = reference::structure_equations();
  for (int l = 1; l <= 8; ++l) {
    const auto d = p.sc.dtheta(l);
    rec.add(check("dtheta" + std::to_string(l), d.to_string(), expected[l - 1].to_string(), d == expected[l - 1]));
  }
}

void cocalibration_checks(report::Recorder& rec, const G2Pipeline& p) {
  const auto cert = g2verify::verify_cocalibrated(p.phi, p.sc);
  rec.add(check("phi basic", "true", "true", cert.phi_basic));
  rec.add(check("d*phi", cert.d_star_phi.to_string(), "0", cert.d_star_phi.is_zero()));
  const auto residual = cert.d_phi - cert.lambda * cert.star_phi - exterior::hodge_star(cert.tau, cert.orientation);
  rec.add(check("dphi - lambda*phi - *tau", residual.to_string(), "0", residual.is_zero() && cert.decomposition_exact));
  rec.add(check("phi^tau", cert.phi_wedge_tau.to_string(), "0", cert.phi_wedge_tau_zero));
  rec.add(check("phi^*tau", cert.phi_wedge_star_tau.to_string(), "0", cert.phi_wedge_star_tau_zero));
  rec.add(check("certificate recheck", "true", "true", cert.recheck(exterior::Differential(p.sc))));
  rec.add(recorded("lambda", str(cert.lambda),
                   {{"orientation", cert.orientation == exterior::Orientation::kPositive ? "positive" : "negative"},
                    {"tau", cert.tau.to_string()},
                    {"tau_nonzero", cert.tau_nonzero}}));
}

void realization_checks(report::Recorder& rec, const G2Pipeline& p) {
  const auto expected_sextic = reference::cubic_sextic();
  rec.add(check("family sextic (2,3)", p.sextic.pretty(), expected_sextic.pretty(), p.sextic == expected_sextic));
  std::array<std::array<AlgebraicScalar, 8>, 8> identity{};
  for (int k = 0; k < 7; ++k) identity[k][k] = 1;
  const auto names = theta_names();
  rec.add(check("g", quadratic_to_string(p.metric, names), quadratic_to_string(identity, names), p.metric == identity));
  const auto phi = reference::g2_three_form();
  rec.add(check("phi", p.phi.to_string(), phi.to_string(), p.phi == phi));
}

std::pair<int, int> expected_signature(orbit::RealForm form) {
  switch (form) {
    case orbit::RealForm::kSplit:
      return {3, 4};
    case orbit::RealForm::kSu3:
      return {4, 3};
    case orbit::RealForm::kSu21:
      return {7, 0};
  }
  return {0, 0};
}

void signature_check(report::Recorder& rec, orbit::RealForm form) {
  const auto s = orbit::metric_signature(form);
  const auto e = expected_signature(form);
  rec.add(check("signature " + orbit::to_string(form), str(s), str(e), s == e,
                {{"phi_metric_signature", str(orbit::phi_metric_signature(form))}}));
}

// ---------------------------------------------------------------------------------------------
// Criteria.

Reports criterion1() {
  report::Recorder rec;
  structure_checks(rec, build_pipeline());
  return rec.take();
}

Reports criterion2() {
  report::Recorder rec;
  cocalibration_checks(rec, build_pipeline());
  return rec.take();
}

Reports criterion3() {
  report::Recorder rec;
  realization_checks(rec, build_pipeline());
  return rec.take();
}

Reports criterion4() {
  report::Recorder rec;
  const auto g = orbit::metric_from_sextic(orbit::family_sextic(2, 3).form);
  const auto expected = reference::cubic_family_metric();
  rec.add(check("(2,3) family metric", quadratic_to_string(g, orbit::kSigmaNames),
                quadratic_to_string(expected, orbit::kSigmaNames), g == expected,
                {{"trace_elimination", "s33 = -s11 - s22"}}));
  return rec.take();
}

Reports criterion5() {
  report::Recorder rec;
  for (auto form : {orbit::RealForm::kSplit, orbit::RealForm::kSu3, orbit::RealForm::kSu21}) signature_check(rec, form);
  return rec.take();
}

Reports criterion6(const Options& options) {
  report::Recorder rec;
  std::mt19937_64 rng(options.seed);
  constexpr int kSamples = 20;
  int i2_ok = 0, alternating_ok = 0, weight6_ok = 0, weight9_ok = 0;
  for (int s = 0; s < kSamples; ++s) {
    const auto u = random_sextic(rng), v = random_sextic(rng), w = random_sextic(rng);
    if (binform::transvectant(v, v, 6, binform::Normalization::kCalibrated)[0] == binform::invariant_i2(v)) ++i2_ok;
    const Rational i3 = binform::invariant_i3(u, v, w);
    if (binform::invariant_i3(v, u, w) == -i3 && binform::invariant_i3(u, w, v) == -i3 &&
        binform::invariant_i3(w, v, u) == -i3 && binform::invariant_i3(u, u, w) == 0 &&
        binform::invariant_i3(u, v, v) == 0)
      ++alternating_ok;
    binform::Matrix2<Rational> n;
    Rational det;
    do {
      for (auto& row : n)
        for (auto& x : row) x = random_rational(rng, 5);
      det = n[0][0] * n[1][1] - n[0][1] * n[1][0];
    } while (det == 0);
    if (binform::invariant_i2(binform::act(v, n)) == pow(det, 6) * binform::invariant_i2(v)) ++weight6_ok;
    if (binform::invariant_i3(binform::act(u, n), binform::act(v, n), binform::act(w, n)) == pow(det, 9) * i3)
      ++weight9_ok;
  }
  const ordered_json details{{"seed", options.seed}, {"samples", kSamples}};
  rec.add(count_check("I2 = calibrated <V,V>_6", i2_ok, kSamples, details));
  rec.add(count_check("I3 alternating", alternating_ok, kSamples, details));
  rec.add(count_check("I2 weight 6", weight6_ok, kSamples, details));
  rec.add(count_check("I3 weight 9", weight9_ok, kSamples, details));
  rec.add(recorded("c(6,6,6)", str(*binform::calibration_constant(6, 6, 6))));
  rec.add(recorded("c(6,6,3)", str(*binform::calibration_constant(6, 6, 3))));
  return rec.take();
}

/// 3⁹(1+k²−k)³/((k−2)²(2k−1)²(k+1)²) in the symbol k.
JetFunction closed_form_symbolic() { return J("19683*(1 + k^2 - k)^3/((k - 2)^2*(2*k - 1)^2*(k + 1)^2)"); }

Reports criterion7() {
  report::Recorder rec;
  for (const Rational& g : {ratio(3, 2), Rational(3), Rational(4), ratio(5, 2), ratio(7, 3)}) {
    const Rational k = wilczynski::curvature_kappa(g);
    const Rational c = wilczynski::curvature_closed_form(g);
    rec.add(check("kappa(" + str(g) + ")", str(k), str(c), k == c,
                  {{"linear_ode_route", str(wilczynski::curvature_of(wilczynski::power_curve_ode(g)))}}));
  }
  rec.add(check("kappa(3/2)", str(wilczynski::curvature_kappa(ratio(3, 2))), str(cubic_kappa()),
                wilczynski::curvature_kappa(ratio(3, 2)) == cubic_kappa()));
  const Rational log_kappa = wilczynski::curvature_kappa_log();
  rec.add(check("kappa(ln)", str(log_kappa), str(ratio(19683, 4)), log_kappa == ratio(19683, 4),
                {{"linear_ode_route", str(wilczynski::curvature_of(wilczynski::log_curve_ode()))}}));

  // y = x^γ with γ kept as the constant symbol k: p₁ = (2 − k)/(3x).
  const wilczynski::LinearODE ode{3, {J("(2 - k)/(3*x)"), JetFunction(), JetFunction()}};
  const auto t3 = wilczynski::classical_theta(ode).at(3);
  const auto t8 = wilczynski::theta8(t3, wilczynski::semi_invariant(ode, 2),
                                     [](const JetFunction& f) { return f.total_derivative(); });
  const auto kappa = (t8.pow(3) / t3.pow(8)).reduced();
  const auto closed = closed_form_symbolic();
  rec.add(check("kappa(gamma) symbolic", kappa.to_string(), closed.to_string(),
                !kappa.depends_on(kX) && kappa == closed, {{"gamma_symbol", "k"}}));
  const auto inverted = kappa.substitute({{kKappa, J("1/k")}}).reduced();
  rec.add(check("kappa(gamma) = kappa(1/gamma)", inverted.to_string(), kappa.to_string(), inverted == kappa));
  return rec.take();
}

Reports criterion8() {
  report::Recorder rec;
  const auto eq = wilczynski::curvature_ode(J("k")).ode;
  const auto theta = wilczynski::generalized_theta(eq);
  for (int r : {3, 4, 5, 7})
    rec.add(check("Theta" + std::to_string(r), theta.at(r).to_string(), "0", theta.at(r).is_zero(),
                  {{"kappa", "k"}}));
  const auto n = wilczynski::halphen_numerator();
  const JetFunction constant = JetFunction(Rational(4) * pow(Rational(3), 12) * pow(Rational(7), 4));
  const auto expected = -(J("400*k") - JetFunction(Rational(19683 * 343))) / constant * n.pow(2) / J("y2^6");
  const auto& t6 = theta.at(6);
  rec.add(check("Theta6", t6.to_string(), ExtendedJetFunction(expected).to_string(), t6 == ExtendedJetFunction(expected),
                {{"constant", "-(2^4*5^2*k - 3^9*7^3)/(2^2*3^12*7^4)"}}));

  // Θ₆ = r(k)·N²/y₂⁶ with N ≢ 0, so all five vanish iff r(k) = 0.
  const auto r = (t6.component(0) * J("y2^6") / n.pow(2)).reduced();
  const bool only_k = !r.depends_on(kX) && [&] {
    for (int k = 0; k <= diffpoly::kMaxJetOrder; ++k)
      if (r.depends_on(jet(k))) return false;
    return true;
  }();
  const bool linear = only_k && r.denominator().is_constant() && r.numerator().degree_in(kKappa) == 1;
  std::string root = "none";
  bool root_ok = false;
  if (linear) {
    const Rational r0 = r.evaluate({{kKappa, 0}});
    const Rational slope = r.evaluate({{kKappa, 1}}) - r0;
    root = str(-r0 / slope);
    root_ok = -r0 / slope == cubic_kappa();
  }
  rec.add(check("unique root of Theta6", root, str(cubic_kappa()), linear && root_ok && !n.is_zero(),
                {{"Theta6*y2^6/N^2", r.to_string()}}));
  const auto at_root = wilczynski::generalized_theta(wilczynski::curvature_ode(JetFunction(cubic_kappa())).ode);
  int vanishing = 0;
  for (const auto& [order, f] : at_root) vanishing += f.is_zero();
  rec.add(check("Theta3..Theta7 at kappa0", count_str(vanishing, static_cast<int>(at_root.size())), count_str(5, 5),
                vanishing == 5 && at_root.size() == 5));
  return rec.take();
}

Reports criterion9() {
  report::Recorder rec;
  for (int n = 3; n <= wilczynski::kMaxOrder; ++n) {
    const auto& theta = wilczynski::classical_theta(n);
    bool eta_free = true, trivial = true;
    ordered_json sizes = ordered_json::object();
    for (const auto& [r, f] : theta) {
      eta_free = eta_free && !f.depends_on(wilczynski::kEta);
      trivial = trivial && f.constant_term() == 0;
      sizes["Theta" + std::to_string(r)] = f.size();
    }
    rec.add(check("eta-free n=" + std::to_string(n), eta_free ? "eta-free" : "eta present", "eta-free", eta_free,
                  {{"terms", sizes}}));
    rec.add(check("Theta_r on Y^(n)=0, n=" + std::to_string(n), trivial ? "0" : "nonzero", "0", trivial));
    int zero = 0;
    const auto general = wilczynski::generalized_theta(wilczynski::parse_ode(n, "0"));
    for (const auto& [r, f] : general) zero += f.is_zero();
    rec.add(count_check("generalized Theta_r on y^(n)=0, n=" + std::to_string(n), zero,
                        static_cast<int>(general.size())));
  }
  return rec.take();
}

Reports criterion10(const Options& options) {
  report::Recorder rec;
  const auto samples = wilczynski::projective_curve_samples(2, 3, options.samples, options.seed);
  int ok = 0;
  ordered_json witnesses = ordered_json::array();
  for (const auto& s : samples) {
    const Rational residual = pow(s.theta8, 3) - cubic_kappa() * pow(s.theta3, 8);
    ok += residual == 0;
    witnesses.push_back({{"transform", matrix_json(s.transform)}, {"t0", str(s.t0)}, {"theta3", str(s.theta3)},
                         {"theta8", str(s.theta8)}, {"residual", str(residual)}});
  }
  rec.add(count_check("Theta8^3 - kappa0*Theta3^8 = 0", ok, options.samples,
                      {{"seed", options.seed}, {"kappa0", str(cubic_kappa())}, {"samples", witnesses}}));
  return rec.take();
}

Reports criterion11() {
  report::Recorder rec;
  int agree = 0, total = 0;
  ordered_json verdicts = ordered_json::object();
  for (int q = 2; q <= 10; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const bool smooth = orbit::legendrian_lift(p, q).smooth;
      const bool predicate = p == 1 || q == p + 1;
      ++total;
      agree += smooth == predicate;
      verdicts[std::to_string(p) + "," + std::to_string(q)] = smooth ? "smooth" : "singular";
    }
  rec.add(count_check("lift smooth iff p = 1 or q = p+1", agree, total, {{"verdicts", verdicts}}));
  const JetFunction x = JetFunction::variable(kX);
  for (int q = 3; q <= 8; ++q) {
    const auto h = wilczynski::halphen_on_power(q);
    const auto c = (h / x.pow(3 * q - 9)).reduced().constant_value();
    rec.add(check("Halphen numerator on x^" + std::to_string(q), h.to_string(),
                  c ? (str(*c) + (3 * q - 9 ? "*x^" + std::to_string(3 * q - 9) : "")) : "c*x^" + std::to_string(3 * q - 9),
                  c && *c != 0 && h == JetFunction(*c) * x.pow(3 * q - 9)));
  }
  return rec.take();
}

Reports criterion12() {
  report::Recorder rec;
  for (const auto& eq : wilczynski::rational_curve_corpus()) {
    const auto theta = wilczynski::generalized_theta(wilczynski::parse_ode(eq.order, eq.rhs));
    for (const auto& [r, f] : theta)
      rec.add(check(eq.name + " Theta" + std::to_string(r), f.to_string(), "0", f.is_zero(),
                    {{"order", eq.order}, {"rhs", eq.rhs}}));
  }
  return rec.take();
}

}  // namespace

std::string criterion_title(int id) {
  static const std::array<std::string, kCriteria> titles{
      "structure equations",        "co-calibration",       "metric and three-form realization",
      "intermediate metric",        "signatures",           "invariant theory",
      "curvature law",              "lemma reproduction",   "eta-cancellation and triviality",
      "sampling oracle",            "lift criterion",       "rational-curve corpus"};
  if (id < 1 || id > kCriteria) throw DomainError("unknown criterion " + std::to_string(id));
  return titles[id - 1];
}

Criterion run_criterion(int id, const Options& options) {
  Criterion c{id, criterion_title(id), {}};
  switch (id) {
    case 1: c.checks = criterion1(); break;
    case 2: c.checks = criterion2(); break;
    case 3: c.checks = criterion3(); break;
    case 4: c.checks = criterion4(); break;
    case 5: c.checks = criterion5(); break;
    case 6: c.checks = criterion6(options); break;
    case 7: c.checks = criterion7(); break;
    case 8: c.checks = criterion8(); break;
    case 9: c.checks = criterion9(); break;
    case 10: c.checks = criterion10(options); break;
    case 11: c.checks = criterion11(); break;
    case 12: c.checks = criterion12(); break;
  }
  return c;
}

std::vector<Criterion> run_acceptance(const Options& options) {
  std::vector<std::future<Criterion>> jobs;
  for (int id = 1; id <= kCriteria; ++id)
    jobs.push_back(std::async(std::launch::async, [id, options] { return run_criterion(id, options); }));
  std::vector<Criterion> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// ---------------------------------------------------------------------------------------------
// Command reports.

Reports g2_report(orbit::RealForm form) {
  report::Recorder rec;
  if (form == orbit::RealForm::kSu21) {
    const auto p = build_pipeline();
    structure_checks(rec, p);
    realization_checks(rec, p);
    cocalibration_checks(rec, p);
    const auto id = g2verify::g2_identities(p.phi);
    rec.add(check("phi^*phi = 7 vol", "true", "true", id.phi_wedge_star_phi_is_7vol));
    rec.add(check("contraction proportional to g", "true", "true", id.proportional_on_samples,
                  {{"samples", id.samples}}));
    rec.add(check("null vector annihilated", "true", "true", id.null_vector_annihilated));
    rec.add(recorded("contraction constant", str(id.contraction_constant)));
  }
  signature_check(rec, form);
  return rec.take();
}

Reports curvature_report(const std::string& gamma) {
  report::Recorder rec;
  if (gamma == "ln") {
    const Rational k = wilczynski::curvature_kappa_log();
    const Rational via_ode = wilczynski::curvature_of(wilczynski::log_curve_ode());
    rec.add(recorded("kappa(ln)", str(k)));
    rec.add(check("jets and linear-equation routes agree", str(k), str(via_ode), k == via_ode));
    return rec.take();
  }
  const Rational g = parse_rational(gamma);
  const Rational k = wilczynski::curvature_kappa(g);
  rec.add(recorded("kappa(" + str(g) + ")", str(k)));
  const Rational c = wilczynski::curvature_closed_form(g);
  rec.add(check("closed form", str(k), str(c), k == c));
  return rec.take();
}

Reports generalized_report(const wilczynski::NonlinearODE& ode) {
  report::Recorder rec;
  for (const auto& [r, f] : wilczynski::generalized_theta(ode))
    rec.add(recorded("Theta" + std::to_string(r), f.to_string(), {{"vanishes", f.is_zero()}}));
  return rec.take();
}

Reports generalized_kappa_report(const std::string& kappa) {
  const JetFunction k = kappa == "k" || kappa == "kappa" ? J("k") : JetFunction(parse_rational(kappa));
  return generalized_report(wilczynski::curvature_ode(k).ode);
}

Reports sample_report(int p, int q, const Options& options) {
  if (options.samples < 1) throw DomainError("need at least one sample");
  const Rational kappa = wilczynski::curvature_closed_form(ratio(q, p));
  report::Recorder rec;
  const auto samples = wilczynski::projective_curve_samples(p, q, options.samples, options.seed);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const Rational residual = pow(s.theta8, 3) - kappa * pow(s.theta3, 8);
    rec.add(check("sample " + std::to_string(i), str(residual), "0", residual == 0,
                  {{"transform", matrix_json(s.transform)},
                   {"t0", str(s.t0)},
                   {"jets", jets_json(s.jets)},
                   {"theta3", str(s.theta3)},
                   {"theta8", str(s.theta8)},
                   {"kappa", str(kappa)}}));
  }
  return rec.take();
}

Reports orbit_report(int p, int q) {
  report::Recorder rec;
  const auto fam = orbit::family_sextic(p, q);
  rec.add(recorded("family sextic", fam.form.pretty(), {{"pulled_out_power", fam.pulled_out_power}}));
  if (p == 2 && q == 3) {
    const auto expected = reference::cubic_sextic();
    rec.add(check("cubic sextic", fam.form.pretty(), expected.pretty(), fam.form == expected));
  }
  const auto w = orbit::stabilizer_weights(p, q);
  rec.add(check("stabilizer", "invariant", "invariant", orbit::stabilizer_check(p, q, w),
                {{"weights", {w[0], w[1], w[2]}}}));
  const auto aw = orbit::aloff_wallach_indices(p, q);
  const auto back = orbit::curve_exponents(aw.first, aw.second);
  rec.add(recorded("Aloff-Wallach indices", str(aw)));
  rec.add(check("indices invert", back ? str(*back) : "none", str(std::pair<long, long>{p, q}),
                back == std::pair<long, long>{p, q}));
  const auto lift = orbit::legendrian_lift(p, q);
  ordered_json value = ordered_json::array(), velocity = ordered_json::array();
  for (int k = 0; k < 3; ++k) {
    value.push_back(str(lift.value_at_zero[k]));
    velocity.push_back(str(lift.velocity_at_zero[k]));
  }
  rec.add(recorded("Legendrian lift", lift.smooth ? "smooth" : "singular",
                   {{"gamma(0)", value}, {"gamma'(0)", velocity}}));
  return rec.take();
}

Reports forms_i2_report(const std::string& v) {
  const auto f = binform::parse_rational_form(v);
  report::Recorder rec;
  rec.add(recorded("I2", str(binform::invariant_i2(f)), {{"v", f.to_string()}}));
  return rec.take();
}

Reports forms_i3_report(const std::string& u, const std::string& v, const std::string& w) {
  const auto a = binform::parse_rational_form(u), b = binform::parse_rational_form(v), c = binform::parse_rational_form(w);
  report::Recorder rec;
  rec.add(recorded("I3", str(binform::invariant_i3(a, b, c)),
                   {{"u", a.to_string()}, {"v", b.to_string()}, {"w", c.to_string()}}));
  return rec.take();
}

Reports forms_transvectant_report(const std::string& u, const std::string& v, int p, bool calibrated) {
  const auto a = binform::parse_rational_form(u), b = binform::parse_rational_form(v);
  const auto t = binform::transvectant(a, b, p, calibrated ? binform::Normalization::kCalibrated
                                                           : binform::Normalization::kPrinted);
  report::Recorder rec;
  rec.add(recorded("<U,V>_" + std::to_string(p), t.pretty(),
                   {{"coefficients", t.to_string()}, {"normalization", calibrated ? "calibrated" : "printed"}}));
  return rec.take();
}

}  // namespace cuspg2::suite
