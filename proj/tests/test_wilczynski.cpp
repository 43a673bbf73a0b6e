#include <doctest.h>

#include <random>

#include "cuspg2/wilczynski.hpp"
#include "test_support.hpp"

using namespace cuspg2;
using namespace cuspg2::wilczynski;
using diffpoly::jet;
using diffpoly::kKappa;
using diffpoly::kX;

namespace {

JetFunction J(const char* s) { return diffpoly::parse_jet_expression(s); }
const Rational kCubicKappa = ratio(6751269, 400);

AbstractPolynomial dp(int i, int k = 0) { return p(i, k); }

// Jets of y = g(x) for a polynomial g given by its coefficients, at x0.
JetPoint polynomial_jets(const std::vector<Rational>& g, const Rational& x0) {
  JetFunction f;
  for (std::size_t k = 0; k < g.size(); ++k) f += JetFunction(g[k]) * JetFunction::variable(kX).pow(static_cast<int>(k));
  JetPoint jets{{kX, x0}};
  for (int k = 0; k <= 7; ++k) {
    jets[jet(k)] = f.evaluate({{kX, x0}});
    f = f.partial(kX);
  }
  return jets;
}

}  // namespace

TEST_CASE("semi-invariants of the third-order equation") {
  const auto& s = semi_invariants(3);
  CHECK(s[2] == dp(2) - dp(1) * dp(1) - dp(1, 1));
  CHECK(s[3] == dp(3) - (dp(1) * dp(2)).scaled(3) + dp(1).pow(3).scaled(2) - dp(1, 2));
  for (int n = 3; n <= 7; ++n) CHECK(semi_invariants(n)[1].is_zero());
}

TEST_CASE("classical Theta_3") {
  const auto& t3 = classical_theta(3).at(3);
  const AbstractPolynomial expected = dp(3) - (dp(1) * dp(2)).scaled(3) + dp(1).pow(3).scaled(2) +
                                      (dp(1) * dp(1, 1)).scaled(3) - dp(2, 1).scaled(ratio(3, 2)) +
                                      dp(1, 2).scaled(ratio(1, 2));
  CHECK(t3 == expected);
  const auto& s = semi_invariants(3);
  CHECK(t3 == s[3] - abstract_derivative(s[2], 3).scaled(ratio(3, 2)));
}

TEST_CASE("eta cancels and the trivial equation has vanishing invariants") {
  for (int n = 3; n <= 7; ++n) {
    const auto& theta = classical_theta(n);
    CHECK(static_cast<int>(theta.size()) == n - 2);
    for (const auto& [r, f] : theta) {
      CHECK_FALSE(f.depends_on(kEta));
      CHECK(f.constant_term() == 0);  // every term involves some p_i, so Y^(n) = 0 gives zero
    }
  }
  CHECK(classical_theta(7).at(7).size() == 81);
}

TEST_CASE("relative invariance of Theta_r under x -> a x") {
  // Random polynomial coefficients p_i(x); rescaling x by a multiplies p_i by a^i.
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 5; ++n) {
    LinearODE ode{n, {}}, scaled{n, {}};
    const Rational a = 2;
    const JetFunction x = JetFunction::variable(kX);
    for (int i = 1; i <= n; ++i) {
      JetFunction c = JetFunction(test_support::random_rational(rng)) + JetFunction(test_support::random_rational(rng)) * x +
                      JetFunction(test_support::random_rational(rng)) * x * x;
      ode.p.push_back(c);
      scaled.p.push_back(JetFunction(cuspg2::pow(a, i)) * c.substitute({{kX, JetFunction(a) * x}}));
    }
    const auto t = classical_theta(ode), ts = classical_theta(scaled);
    for (int r = 3; r <= n; ++r) {
      const Rational x0 = ratio(1, 3);
      CHECK(ts.at(r).evaluate({{kX, x0}}) == cuspg2::pow(a, r) * t.at(r).evaluate({{kX, a * x0}}));
    }
  }
}

TEST_CASE("graph equations") {
  CHECK(graph_ode(J("x^2")).p[0].is_zero());
  CHECK(power_curve_ode(ratio(3, 2)).p[0] == J("1/(6*x)"));
  const auto log_ode = log_curve_ode();
  CHECK(log_ode.p[0] == J("2/(3*x)"));
  CHECK(log_ode.p[1].is_zero());
  CHECK(log_ode.p[2].is_zero());
  CHECK(graph_ode(J("x^4")).p[0] == J("-2/(3*x)"));
  CHECK_THROWS_AS(graph_ode(J("3*x + 1")), DomainError);
  // Basis [1, x, x^4] reproduces the graph route.
  std::array<std::array<JetFunction, 4>, 3> basis{{{J("1"), J("0"), J("0"), J("0")},
                                                   {J("x"), J("1"), J("0"), J("0")},
                                                   {J("x^4"), J("4*x^3"), J("12*x^2"), J("24*x")}}};
  CHECK(ode_from_basis(basis).p[0] == graph_ode(J("x^4")).p[0]);
}

TEST_CASE("Halphen expression") {
  const auto h = halphen_theta3();
  CHECK(h.evaluate(polynomial_jets({0, 0, 1}, 3)) == 0);
  CHECK(h.evaluate(polynomial_jets({1, 2, 5}, ratio(1, 7))) == 0);
  // y = x^3: 40/x^3.
  const JetFunction x = JetFunction::variable(kX);
  std::map<std::size_t, JetFunction> cubic{{jet(2), J("6*x")}, {jet(3), J("6")}, {jet(4), J("0")}, {jet(5), J("0")}};
  CHECK(h.substitute(cubic) == J("40/x^3"));
  for (int q = 3; q <= 8; ++q) {
    const auto f = halphen_on_power(q);
    const auto c = (f / x.pow(3 * q - 9)).reduced().constant_value();
    REQUIRE(c);
    CHECK(*c != 0);
  }
  CHECK(halphen_calibration() == -54);
  CHECK(halphen_theta3() == JetFunction(-54) * graph_theta3());
}

TEST_CASE("Theta_8") {
  CHECK(theta8(JetFunction(), J("y2"), [](const JetFunction& f) { return f.total_derivative(); }).is_zero());
  // Weight 8: y~(x) = g(2x) has Theta_8[y~](x0) = 2^8 Theta_8[g](2 x0).
  const std::vector<Rational> g{1, 2, -1, 3, 1, ratio(1, 2), 2, 1};
  std::vector<Rational> gs = g;
  for (std::size_t k = 0; k < gs.size(); ++k) gs[k] *= cuspg2::pow(Rational(2), static_cast<long>(k));
  const Rational x0 = ratio(1, 5);
  CHECK(graph_theta8().evaluate(polynomial_jets(gs, x0)) ==
        256 * graph_theta8().evaluate(polynomial_jets(g, 2 * x0)));
  CHECK(graph_theta3().evaluate(polynomial_jets(gs, x0)) == 8 * graph_theta3().evaluate(polynomial_jets(g, 2 * x0)));
}

TEST_CASE("projective curvature") {
  CHECK(curvature_kappa(ratio(3, 2)) == kCubicKappa);
  CHECK(kCubicKappa == ratio(19683 * 343, 16 * 25));
  CHECK(curvature_kappa_log() == ratio(19683, 4));
  CHECK(curvature_of(log_curve_ode()) == ratio(19683, 4));
  for (const Rational& g : {ratio(3, 2), Rational(3), Rational(4), ratio(5, 2), ratio(7, 3), ratio(-3, 4)}) {
    CHECK(curvature_kappa(g) == curvature_closed_form(g));
    CHECK(curvature_of(power_curve_ode(g)) == curvature_closed_form(g));
    CHECK(curvature_closed_form(g) == curvature_closed_form(1 / g));
  }
  for (const Rational& g : {Rational(0), Rational(1), Rational(-1), Rational(2), ratio(1, 2)})
    CHECK_THROWS_AS(curvature_kappa(g), DomainError);
}

TEST_CASE("curvature equation") {
  const auto c = curvature_ode(J("k"));
  CHECK(c.a == -graph_theta3() / J("y2"));
  CHECK_FALSE(c.b.depends_on(jet(7)));
  for (int k = 0; k < 3; ++k) CHECK_FALSE(c.ode.rhs.component(k).depends_on(jet(7)));
  CHECK(c.a * J("y7") + c.b == graph_theta8());
  CHECK_THROWS_AS(curvature_ode(JetFunction()), DomainError);
  CHECK_THROWS_AS(curvature_ode(J("y1")), DomainError);
}

TEST_CASE("generalized invariants of the curvature equation") {
  const auto theta = generalized_theta(curvature_ode(J("k")).ode);
  for (const auto& [r, f] : theta) CHECK(f.is_rational());
  CHECK(theta.at(3).is_zero());
  CHECK(theta.at(4).is_zero());
  CHECK(theta.at(5).is_zero());
  CHECK(theta.at(7).is_zero());
  const auto expected = -(J("400*k") - JetFunction(19683 * 343)) / JetFunction(Rational(4) * cuspg2::pow(Rational(3), 12) * cuspg2::pow(Rational(7), 4)) *
                        halphen_numerator().pow(2) / J("y2^6");
  CHECK(theta.at(6).component(0) == expected);
  const auto at_cubic = generalized_theta(curvature_ode(JetFunction(kCubicKappa)).ode);
  for (const auto& [r, f] : at_cubic) CHECK(f.is_zero());
  const auto w = wunschmann_relations(at_cubic.at(3), at_cubic.at(4), curvature_ode(JetFunction(kCubicKappa)).ode);
  CHECK(w.w1.is_zero());
  CHECK(w.w2.is_zero());
  const auto generic = curvature_ode(J("k")).ode;
  CHECK(wunschmann_relations(theta.at(3), theta.at(4), generic).w1.is_zero());
}

TEST_CASE("generalized invariants of linear equations agree with the classical ones") {
  const auto trivial = generalized_theta(parse_ode(7, "0"));
  for (const auto& [r, f] : trivial) CHECK(f.is_zero());
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 5; ++n) {
    LinearODE ode{n, {}};
    for (int i = 1; i <= n; ++i)
      ode.p.push_back(JetFunction(test_support::random_rational(rng)) * J("x") + JetFunction(test_support::random_rational(rng)));
    const auto classical = classical_theta(ode);
    const auto general = generalized_theta(as_nonlinear(ode));
    for (int r = 3; r <= n; ++r) CHECK(general.at(r) == ExtendedJetFunction(classical.at(r)));
  }
}

TEST_CASE("rational-curve corpus has vanishing invariants") {
  for (const auto& eq : rational_curve_corpus()) {
    CAPTURE(eq.name);
    for (const auto& [r, f] : generalized_theta(parse_ode(eq.order, eq.rhs))) CHECK(f.is_zero());
  }
}

TEST_CASE("jets along parametrized curves") {
  const JetFunction t = JetFunction::variable(kX);
  CHECK(jets_along_curve(t.pow(2), t.pow(3), 1, 1).at(jet(1)) == ratio(3, 2));
  CHECK(jets_along_curve(t, t.pow(3), 2, 2).at(jet(2)) == 12);
  CHECK_THROWS_AS(jets_along_curve(t.pow(2), t.pow(3), 2, 0), DomainError);
}

TEST_CASE("projective images of the cuspidal cubic lie on the curvature equation") {
  const auto samples = projective_curve_samples(2, 3, 10, 42);
  REQUIRE(samples.size() == 10);
  for (const auto& s : samples) {
    CHECK(cuspg2::pow(s.theta8, 3) - kCubicKappa * cuspg2::pow(s.theta3, 8) == 0);
    CHECK(curvature_at_jets(s.jets) == kCubicKappa);
  }
  for (const auto& s : projective_curve_samples(2, 5, 5, 1))
    CHECK(curvature_at_jets(s.jets) == curvature_closed_form(ratio(5, 2)));
  // Determinism in the seed.
  CHECK(projective_curve_samples(2, 3, 3, 9)[2].t0 == projective_curve_samples(2, 3, 3, 9)[2].t0);
}
