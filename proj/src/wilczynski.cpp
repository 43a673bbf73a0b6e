#include "cuspg2/wilczynski.hpp"

#include <mutex>
#include <random>

#include "cuspg2/errors.hpp"
#include "cuspg2/linalg.hpp"

namespace cuspg2::wilczynski {

using diffpoly::Equation;
using diffpoly::jet;
using diffpoly::kKappa;
using diffpoly::kX;

std::string abstract_name(std::size_t v) {
  if (v == kEta) return "eta";
  const int i = static_cast<int>(v / (kMaxDerivative + 1)) + 1;
  const int k = static_cast<int>(v % (kMaxDerivative + 1));
  std::string s = "p" + std::to_string(i);
  if (k <= 3) return s + std::string(static_cast<std::size_t>(k), '\'');
  return s + "^(" + std::to_string(k) + ")";
}

std::string to_string(const AbstractPolynomial& f) { return f.to_string(abstract_name); }

AbstractPolynomial p(int i, int k) {
  if (i < 1 || i > kMaxOrder || k < 0 || k > kMaxDerivative) throw DomainError("coefficient index out of range");
  return AbstractPolynomial::variable(coefficient_var(i, k));
}

namespace {

std::mutex cache_mutex;

void check_order(int n) {
  if (n < 2 || n > kMaxOrder) throw DomainError("equation order must be in 2..7");
}

// Derivation with a given image for η.
AbstractPolynomial derive(const AbstractPolynomial& f, const AbstractPolynomial* eta_image) {
  AbstractPolynomial r;
  for (int i = 1; i <= kMaxOrder; ++i)
    for (int k = 0; k <= kMaxDerivative; ++k) {
      const auto v = coefficient_var(i, k);
      if (!f.depends_on(v)) continue;
      if (k == kMaxDerivative) throw DomainError("coefficient derivative order exceeds the ring");
      r += f.derivative(v) * AbstractPolynomial::variable(coefficient_var(i, k + 1));
    }
  if (f.depends_on(kEta)) {
    if (!eta_image) throw InvariantViolation("unexpected eta in a semi-invariant");
    r += f.derivative(kEta) * *eta_image;
  }
  return r;
}

std::vector<AbstractPolynomial> compute_semi_invariants(int n) {
  // Y^{(m)} = λ Σ_j c[m][j] Z^{(j)}.
  std::vector<std::vector<AbstractPolynomial>> c(n + 1);
  c[0] = {AbstractPolynomial(1)};
  for (int m = 0; m < n; ++m) {
    std::vector<AbstractPolynomial> next(m + 2);
    for (int j = 0; j <= m; ++j) {
      next[j] += derive(c[m][j], nullptr) - c[m][j] * p(1);
      next[j + 1] += c[m][j];
    }
    c[m + 1] = std::move(next);
  }
  std::vector<AbstractPolynomial> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    AbstractPolynomial coeff;
    for (int kk = 0; kk <= k; ++kk) {
      const AbstractPolynomial pk = kk == 0 ? AbstractPolynomial(1) : p(kk);
      coeff += (pk * c[n - kk][n - k]).scaled(binomial(n, kk));
    }
    out[k] = coeff.scaled(1 / binomial(n, k));
  }
  if (!out[1].is_zero()) throw InvariantViolation("semi-canonical form has a nonzero Y^(n-1) coefficient");
  return out;
}

std::map<int, AbstractPolynomial> compute_classical_theta(int n) {
  const auto& semi = semi_invariants(n);
  const AbstractPolynomial eta = AbstractPolynomial::variable(kEta);
  const AbstractPolynomial eta_image = (eta * eta).scaled(Rational(1, 2)) + semi[2].scaled(ratio(6, n + 1));
  auto d = [&](const AbstractPolynomial& f) { return derive(f, &eta_image); };
  const Rational m = ratio(n - 1, 2);
  // Y^{(k)} = Σ_j C[k][j] (ξ′)^{j−m} Ỹ_{(j)} with ξ″ = ξ′η.
  std::vector<std::vector<AbstractPolynomial>> cc(n + 1);
  cc[0] = {AbstractPolynomial(1)};
  for (int k = 0; k < n; ++k) {
    std::vector<AbstractPolynomial> next(k + 2);
    for (int j = 0; j <= k; ++j) {
      next[j] += d(cc[k][j]) + (eta * cc[k][j]).scaled(Rational(j) - m);
      next[j + 1] += cc[k][j];
    }
    cc[k + 1] = std::move(next);
  }
  // q_k (ξ′)^{k} = Q[k][0]; t-derivatives Q[k][s] carry (ξ′)^{−(k+s)}.
  std::vector<std::vector<AbstractPolynomial>> q(n + 1);
  for (int k = 0; k <= n; ++k) {
    AbstractPolynomial a;
    for (int kk = 0; kk <= n; ++kk) {
      if (n - kk < n - k) continue;
      a += (semi[kk] * cc[n - kk][n - k]).scaled(binomial(n, kk));
    }
    q[k] = {a.scaled(1 / binomial(n, k))};
  }
  if (!q[0][0].is_zero() && q[0][0] != AbstractPolynomial(1)) throw InvariantViolation("canonical form not monic");
  if (!q[1][0].is_zero()) throw InvariantViolation("canonical form has a nonzero Y^(n-1) coefficient");
  std::map<int, AbstractPolynomial> theta;
  for (int r = 3; r <= n; ++r) {
    AbstractPolynomial sum;
    for (int s = 0; s <= r - 3; ++s) {
      const int k = r - s;
      while (static_cast<int>(q[k].size()) <= s) {
        const int t = static_cast<int>(q[k].size()) - 1;
        q[k].push_back(d(q[k][t]) - (eta * q[k][t]).scaled(Rational(k + t)));
      }
      Rational coeff = factorial(r - 2) * factorial(r) * factorial(2 * r - s - 2) /
                       (factorial(r - s - 1) * factorial(r - s) * factorial(2 * r - 3) * factorial(s));
      if (s % 2) coeff = -coeff;
      sum += q[k][s].scaled(coeff);
    }
    sum = sum.scaled(Rational(1, 2));
    if (sum.depends_on(kEta)) throw InvariantViolation("eta survives in Theta_" + std::to_string(r));
    theta[r] = std::move(sum);
  }
  return theta;
}

// Substitution homomorphism of the abstract ring; image(i, k) supplies p_i^{(k)}.
template <class T, class Image>
T substitute(const AbstractPolynomial& f, Image&& image) {
  std::map<std::size_t, T> table;
  return f.template evaluate_with<T>([&](std::size_t v) -> const T& {
    auto it = table.find(v);
    if (it != table.end()) return it->second;
    if (v == kEta) throw InvariantViolation("eta in a substituted invariant");
    const int i = static_cast<int>(v / (kMaxDerivative + 1)) + 1;
    const int k = static_cast<int>(v % (kMaxDerivative + 1));
    return table.emplace(v, image(i, k)).first->second;
  });
}

// Lazily computed D_x^k of linear-equation coefficients.
std::function<JetFunction(int, int)> linear_images(const LinearODE& ode) {
  auto cache = std::make_shared<std::map<std::pair<int, int>, JetFunction>>();
  auto coefficients = ode.p;
  return [cache, coefficients](int i, int k) {
    if (i > static_cast<int>(coefficients.size())) return JetFunction();
    auto key = std::pair{i, 0};
    if (!cache->count(key)) (*cache)[key] = coefficients[i - 1];
    for (int j = 1; j <= k; ++j) {
      const auto kj = std::pair{i, j};
      if (!cache->count(kj)) (*cache)[kj] = (*cache)[{i, j - 1}].total_derivative();
    }
    return (*cache)[{i, k}];
  };
}

Rational falling(const Rational& g, int k) {
  Rational r = 1;
  for (int j = 0; j < k; ++j) r *= g - j;
  return r;
}

}  // namespace

AbstractPolynomial abstract_derivative(const AbstractPolynomial& f, int n) {
  check_order(n);
  const AbstractPolynomial eta = AbstractPolynomial::variable(kEta);
  const AbstractPolynomial image =
      (eta * eta).scaled(Rational(1, 2)) + semi_invariants(n)[2].scaled(ratio(6, n + 1));
  return derive(f, &image);
}

const std::vector<AbstractPolynomial>& semi_invariants(int n) {
  check_order(n);
  static std::map<int, std::vector<AbstractPolynomial>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto value = compute_semi_invariants(n);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

const std::map<int, AbstractPolynomial>& classical_theta(int n) {
  check_order(n);
  static std::map<int, std::map<int, AbstractPolynomial>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto value = compute_classical_theta(n);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

// ---------------------------------------------------------------------------------------------

LinearODE graph_ode(const JetFunction& f) {
  const auto f2 = f.partial(kX).partial(kX);
  if (f2.is_zero()) throw DomainError("graph is a line: second derivative vanishes");
  return {3, {-f2.partial(kX) / (JetFunction(3) * f2), JetFunction(), JetFunction()}};
}

LinearODE ode_from_basis(const std::array<std::array<JetFunction, 4>, 3>& d) {
  linalg::Matrix<JetFunction> a(3, std::vector<JetFunction>(3));
  std::vector<JetFunction> b(3);
  for (int i = 0; i < 3; ++i) {
    a[i] = {JetFunction(3) * d[i][2], JetFunction(3) * d[i][1], d[i][0]};
    b[i] = -d[i][3];
  }
  const auto x = linalg::solve(a, b);
  if (!x) throw DomainError("basis functions are linearly dependent");
  LinearODE ode{3, {(*x)[0].reduced(), (*x)[1].reduced(), (*x)[2].reduced()}};
  for (const auto& c : ode.p)
    for (std::size_t v = 1; v < diffpoly::kJetVars; ++v)
      if (c.depends_on(v)) throw DomainError("coefficients depend on more than x");
  return ode;
}

LinearODE power_curve_ode(const Rational& gamma) {
  if (gamma == 0 || gamma == 1) throw DomainError("graph of x^gamma is a line");
  return {3, {JetFunction(Rational(2 - gamma) / 3) / JetFunction::variable(kX), JetFunction(), JetFunction()}};
}

LinearODE log_curve_ode() {
  const JetFunction x = JetFunction::variable(kX);
  const JetFunction ln = JetFunction::variable(jet(0));  // transcendental symbol for ln x
  std::array<std::array<JetFunction, 4>, 3> d{{
      {JetFunction(1), JetFunction(), JetFunction(), JetFunction()},
      {x, JetFunction(1), JetFunction(), JetFunction()},
      {ln, x.inverse(), -x.pow(-2), JetFunction(2) * x.pow(-3)},
  }};
  return ode_from_basis(d);
}

std::map<int, JetFunction> classical_theta(const LinearODE& ode) {
  const auto images = linear_images(ode);
  std::map<int, JetFunction> out;
  for (const auto& [r, f] : classical_theta(ode.order)) out[r] = substitute<JetFunction>(f, images).reduced();
  return out;
}

JetFunction semi_invariant(const LinearODE& ode, int k) {
  return substitute<JetFunction>(semi_invariants(ode.order).at(k), linear_images(ode)).reduced();
}

// ---------------------------------------------------------------------------------------------

JetFunction halphen_numerator() { return diffpoly::parse_jet_expression("9*y2^2*y5 - 45*y2*y3*y4 + 40*y3^3"); }

JetFunction halphen_theta3() { return halphen_numerator() / JetFunction::variable(jet(2)).pow(3); }

namespace {

JetFunction graph_p1() { return -JetFunction::variable(jet(3)) / (JetFunction(3) * JetFunction::variable(jet(2))); }

// Θ₃ and P₂ of y‴ + 3p₁y″ = 0 with p₁ the graph coefficient, D_x the free total derivative.
std::function<JetFunction(int, int)> graph_images() {
  auto p1 = graph_p1();
  return [p1](int i, int k) {
    if (i != 1) return JetFunction();
    JetFunction r = p1;
    for (int j = 0; j < k; ++j) r = r.total_derivative();
    return r;
  };
}

}  // namespace

JetFunction graph_theta3() { return substitute<JetFunction>(classical_theta(3).at(3), graph_images()).reduced(); }

JetFunction graph_p2() { return substitute<JetFunction>(semi_invariants(3)[2], graph_images()).reduced(); }

Rational halphen_calibration() {
  const auto ratio = (halphen_theta3() / graph_theta3()).reduced().constant_value();
  if (!ratio) throw InvariantViolation("Halphen expression is not a constant multiple of Theta_3");
  return *ratio;
}

JetFunction graph_theta8() {
  static const JetFunction value = [] {
    return theta8(graph_theta3(), graph_p2(), [](const JetFunction& f) { return f.total_derivative(); }).reduced();
  }();
  return value;
}

Rational curvature_closed_form(const Rational& g) {
  if (g == 0 || g == 1 || g == -1 || g == 2 || g == Rational(1, 2))
    throw DomainError("projective curvature undefined for this exponent");
  const Rational num = cuspg2::pow(Rational(19683), 1) * cuspg2::pow(1 + g * g - g, 3);
  return num / (cuspg2::pow(g - 2, 2) * cuspg2::pow(2 * g - 1, 2) * cuspg2::pow(g + 1, 2));
}

Rational curvature_at_jets(const JetPoint& jets) {
  const Rational t3 = graph_theta3().evaluate(jets);
  if (t3 == 0) throw DomainError("Theta_3 vanishes: curvature undefined");
  const Rational t8 = graph_theta8().evaluate(jets);
  return cuspg2::pow(t8, 3) / cuspg2::pow(t3, 8);
}

Rational curvature_of(const LinearODE& ode) {
  if (ode.order != 3) throw DomainError("curvature needs an order-3 equation");
  const auto t3 = classical_theta(ode).at(3);
  if (t3.is_zero()) throw DomainError("Theta_3 vanishes: curvature undefined");
  const auto p2 = semi_invariant(ode, 2);
  const auto t8 = theta8(t3, p2, [](const JetFunction& f) { return f.total_derivative(); });
  const auto kappa = (t8.pow(3) / t3.pow(8)).reduced().constant_value();
  if (!kappa) throw DomainError("curvature is not constant along the curve");
  return *kappa;
}

Rational curvature_kappa(const Rational& gamma) {
  curvature_closed_form(gamma);  // rejects the degenerate exponents
  JetPoint jets{{kX, 1}};
  for (int k = 0; k <= 7; ++k) jets[jet(k)] = falling(gamma, k);
  return curvature_at_jets(jets);
}

Rational curvature_kappa_log() {
  JetPoint jets{{kX, 1}, {jet(0), 0}};
  for (int k = 1; k <= 7; ++k) {
    Rational v = factorial(k - 1);
    jets[jet(k)] = k % 2 ? v : Rational(-v);
  }
  return curvature_at_jets(jets);
}

// ---------------------------------------------------------------------------------------------

NonlinearODE as_nonlinear(const LinearODE& ode) {
  const int n = ode.order;
  JetFunction f;
  for (int k = 1; k <= n; ++k) f -= JetFunction(binomial(n, k)) * ode.p[k - 1] * JetFunction::variable(jet(n - k));
  return {n, ExtendedJetFunction(f)};
}

CurvatureODE curvature_ode(const JetFunction& kappa) {
  if (kappa.is_zero()) throw DomainError("curvature constant must be nonzero");
  for (std::size_t v = 0; v < diffpoly::kJetVars; ++v)
    if (v != kKappa && kappa.depends_on(v)) throw DomainError("curvature constant must not involve jets");
  const auto t3 = graph_theta3();
  const auto t8 = graph_theta8();
  const auto y7 = JetFunction::variable(jet(7));
  const JetFunction a = t8.partial(jet(7)).reduced();
  const JetFunction b = (t8 - a * y7).reduced();
  if (a.is_zero()) throw InvariantViolation("Theta_8 does not involve y7");
  if (b.depends_on(jet(7))) throw InvariantViolation("Theta_8 is not linear in y7");
  auto base = diffpoly::CubeRootBase::from(kappa);
  const auto t3_base = diffpoly::CubeRootBase::from(t3);
  base.constant *= cuspg2::pow(t3_base.constant, 8);
  for (const auto& [f, m] : t3_base.factors) base.factors.push_back({f, 8 * m});
  const auto u = ExtendedJetFunction::generator(std::make_shared<const diffpoly::CubeRootBase>(std::move(base)));
  return {{7, (u - ExtendedJetFunction(b)) / a}, a, b};
}

std::map<int, ExtendedJetFunction> generalized_theta(const NonlinearODE& ode) {
  const int n = ode.order;
  check_order(n);
  for (int k = n; k <= diffpoly::kMaxJetOrder; ++k)
    if (ode.rhs.component(0).depends_on(jet(k)) || ode.rhs.component(1).depends_on(jet(k)) ||
        ode.rhs.component(2).depends_on(jet(k)))
      throw DomainError("right-hand side involves y_n or higher");
  const Equation eq{n, std::make_shared<const ExtendedJetFunction>(ode.rhs)};
  std::map<std::pair<int, int>, ExtendedJetFunction> cache;
  auto image = [&](int i, int k) -> ExtendedJetFunction {
    if (i > n) return {};
    for (int j = 0; j <= k; ++j) {
      if (cache.count({i, j})) continue;
      if (j == 0) {
        cache[{i, 0}] = ode.rhs.partial(jet(n - i)) / JetFunction(-binomial(n, i));
      } else {
        const auto& prev = cache.at({i, j - 1});
        cache[{i, j}] = prev.total_derivative(eq).reduced();
      }
    }
    return cache.at({i, k});
  };
  std::map<int, ExtendedJetFunction> out;
  for (const auto& [r, f] : classical_theta(n)) out[r] = substitute<ExtendedJetFunction>(f, image).reduced();
  return out;
}

Wunschmann wunschmann_relations(const ExtendedJetFunction& theta3, const ExtendedJetFunction& theta4,
                                const NonlinearODE& ode) {
  if (ode.order != 7) throw DomainError("the Wunschmann relations are stated for order 7");
  const Equation eq{7, std::make_shared<const ExtendedJetFunction>(ode.rhs)};
  Wunschmann w;
  w.w1 = ExtendedJetFunction(Rational(-3430)) * theta3;
  const auto dtheta3 = theta3.total_derivative(eq);
  const auto f6 = ode.rhs.partial(jet(6));
  w.w2 = ExtendedJetFunction(Rational(-240100)) *
         (theta4 + ExtendedJetFunction(Rational(2, 5)) * dtheta3 - ExtendedJetFunction(Rational(12, 35)) * f6 * theta3);
  w.w1 = w.w1.reduced();
  w.w2 = w.w2.reduced();
  return w;
}

// ---------------------------------------------------------------------------------------------

JetPoint jets_along_curve(const JetFunction& xparam, const JetFunction& yparam, int k, const Rational& t0) {
  if (k < 0 || k > diffpoly::kMaxJetOrder) throw DomainError("jet order out of range");
  const JetPoint at{{kX, t0}};
  const JetFunction xdot = xparam.partial(kX);
  if (xdot.evaluate(at) == 0) throw DomainError("dx/dt vanishes at the sample point");
  JetPoint jets{{kX, xparam.evaluate(at)}, {jet(0), yparam.evaluate(at)}};
  JetFunction current = yparam;
  for (int j = 1; j <= k; ++j) {
    current = (current.partial(kX) / xdot).reduced();
    jets[jet(j)] = current.evaluate(at);
  }
  return jets;
}

NonlinearODE parse_ode(int order, std::string_view rhs) {
  check_order(order);
  return {order, ExtendedJetFunction(diffpoly::parse_jet_expression(rhs))};
}

const std::vector<CorpusEquation>& rational_curve_corpus() {
  static const std::vector<CorpusEquation> corpus{
      {"two-cusp-sextics", 7, "(105*y6*y5*y4 - 84*y5^3)/(25*y4^2)"},
      {"sp2-sextics", 7, "(70*y3^2*y4*y6 + 49*y3^2*y5^2 - 280*y3*y4^2*y5 + 175*y4^4)/(10*y3^3)"},
      {"conics", 5, "(45*y2*y3*y4 - 40*y3^3)/(9*y2^2)"},
      {"schwarzian", 3, "3*y2^2/(2*y1)"},
  };
  return corpus;
}

JetFunction halphen_on_power(int q) {
  const JetFunction x = JetFunction::variable(kX);
  std::map<std::size_t, JetFunction> images;
  for (int k = 2; k <= 5; ++k) images[jet(k)] = JetFunction(falling(Rational(q), k)) * x.pow(q - k);
  return halphen_numerator().substitute(images).reduced();
}

std::vector<CurveSample> projective_curve_samples(int p, int q, int count, std::uint64_t seed) {
  if (p <= 0 || q <= 0 || p == q) throw DomainError("invalid curve exponents");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-5, 5), positive(1, 5);
  auto rational = [&] {
    Rational r(small(rng), positive(rng));
    r.canonicalize();
    return r;
  };
  auto nonzero = [&] {
    Rational r;
    do r = rational();
    while (r == 0);
    return r;
  };
  const JetFunction t = JetFunction::variable(kX);
  const std::array<JetFunction, 3> v{t.pow(p), t.pow(q), JetFunction(1)};
  std::vector<CurveSample> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 50 * count + 100) throw InvariantViolation("sampler failed to find regular points");
    // M = L·D·U with unit triangular L, U and det D = 1.
    const Rational a = nonzero(), b = nonzero();
    Matrix3Q l{{{1, 0, 0}, {rational(), 1, 0}, {rational(), rational(), 1}}};
    Matrix3Q u{{{1, rational(), rational()}, {0, 1, rational()}, {0, 0, 1}}};
    const std::array<Rational, 3> d{a, b, 1 / (a * b)};
    Matrix3Q m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m[i][j] += l[i][k] * d[k] * u[k][j];
    std::array<JetFunction, 3> w;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) w[i] += JetFunction(m[i][j]) * v[j];
    const Rational t0 = nonzero();
    const JetPoint at{{kX, t0}};
    if (w[2].evaluate(at) == 0) continue;
    const JetFunction xp = w[0] / w[2], yp = w[1] / w[2];
    if (xp.partial(kX).evaluate(at) == 0) continue;
    CurveSample s{m, t0, jets_along_curve(xp, yp, 7, t0), 0, 0};
    if (s.jets.at(jet(2)) == 0) continue;
    s.theta3 = graph_theta3().evaluate(s.jets);
    if (s.theta3 == 0) continue;
    s.theta8 = graph_theta8().evaluate(s.jets);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cuspg2::wilczynski
