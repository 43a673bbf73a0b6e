#include "cuspg2/errors.hpp"
#include "cuspg2/orbit.hpp"
#include "cuspg2/reference.hpp"
#include "doctest.h"

using namespace cuspg2::orbit;
using cuspg2::Rational;

namespace {

SigmaLinear sym(int a, int b) { return SigmaLinear::symbol(a, b); }

}  // namespace

TEST_CASE("cubic family sextic") {
  const auto fam = family_sextic(2, 3);
  CHECK(fam.pulled_out_power == 3);
  const auto m = fam.form.monomials();  // m[k]: coefficient of t^{6−k} s^k
  REQUIRE(m.size() == 7);
  CHECK(m[6] == sym(2, 3) * Scalar(2));
  CHECK(m[5] == sym(1, 3) * Scalar(-3));
  CHECK(m[4] == sym(2, 1) * Scalar(2));
  CHECK(m[3] == sym(3, 3) + sym(2, 2) * Scalar(2) - sym(1, 1) * Scalar(3));
  CHECK(m[2] == sym(1, 2) * Scalar(-3));
  CHECK(m[1] == sym(3, 1));
  CHECK(m[0] == sym(3, 2));
}

TEST_CASE("general family sextic") {
  for (auto [p, q] : {std::pair{1, 4}, {2, 5}, {3, 7}, {3, 5}}) {
    const auto fam = family_sextic(p, q);
    CHECK(fam.form.degree() == 2 * q);
    CHECK(fam.pulled_out_power == q * (p - 1));
    const auto m = fam.form.monomials();
    // t^q s^q sits at index q.
    CHECK(m[q] == sym(3, 3) * Scalar(q - p) + sym(2, 2) * Scalar(p) - sym(1, 1) * Scalar(q));
    CHECK(m[0] == sym(3, 2) * Scalar(q - p));
    CHECK(m[2 * q] == sym(2, 3) * Scalar(p));
    CHECK(m[q - p] == sym(3, 1) * Scalar(q - p));
  }
  CHECK_THROWS_AS(family_sextic(2, 4), cuspg2::DomainError);
  CHECK_THROWS_AS(family_sextic(3, 2), cuspg2::DomainError);
}

TEST_CASE("metric of the cubic family") {
  const Gram g = metric_from_sextic(family_sextic(2, 3).form);
  const SigmaLinear diag = sym(1, 1) * Scalar(4) - sym(2, 2);
  const Gram expected = scale(symmetric_product(sym(3, 2), sym(2, 3)), 2) +
                        scale(symmetric_product(sym(3, 1), sym(1, 3)), Rational(1, 2)) +
                        scale(symmetric_product(sym(1, 2), sym(2, 1)), Rational(-2, 5)) +
                        scale(symmetric_product(diag, diag), Rational(-1, 40));
  CHECK(g == expected);
  // The a³ path alone.
  const SigmaLinear a3 = (sym(3, 3) + sym(2, 2) * Scalar(2) - sym(1, 1) * Scalar(3)) * Scalar(Rational(1, 20));
  CHECK(scale(symmetric_product(a3, a3), -10) == scale(symmetric_product(diag, diag), Rational(-1, 40)));
  const Gram zero{};
  CHECK(metric_from_sextic(CoframeSextic::zero(6)) == zero);
}

TEST_CASE("three-form of the cubic family") {
  CHECK(threeform_from_sextic(CoframeSextic::zero(6)).is_zero());
  const auto s = family_sextic(2, 3).form;
  // Reversing the coefficient order flips the sign.
  std::vector<SigmaLinear> reversed(s.coefficients().rbegin(), s.coefficients().rend());
  CHECK(threeform_from_sextic(CoframeSextic(reversed)) == -threeform_from_sextic(s));
}

TEST_CASE("realization over su(2,1)") {
  const auto dict = su21_dictionary(cuspg2::liealg::su21_frame());
  const auto sextic = family_sextic(2, 3).form;
  const auto g = realize_metric(metric_from_sextic(sextic), dict);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(g[a][b] == Scalar(a == b && a < 7 ? 1 : 0));
  const auto phi = realize_form(threeform_from_sextic(sextic), dict);
  CHECK(phi == cuspg2::reference::g2_three_form());
  CHECK(phi.is_basic());
}

TEST_CASE("signatures") {
  CHECK(metric_signature(RealForm::kSplit) == std::pair{3, 4});
  CHECK(metric_signature(RealForm::kSu21) == std::pair{7, 0});
  // The compact-type form yields the same split signature as SL(3,R) (see notes).
  CHECK(metric_signature(RealForm::kSu3) == std::pair{3, 4});
  CHECK(phi_metric_signature(RealForm::kSu21) == std::pair{7, 0});
  CHECK(phi_metric_signature(RealForm::kSu3) == std::pair{3, 4});
  CHECK(phi_metric_signature(RealForm::kSplit) == std::pair{3, 4});
  CHECK(signature({{0, 1}, {1, 0}}) == std::pair{1, 1});
  CHECK(signature({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}) == std::pair{2, 1});
  CHECK_THROWS_AS(signature({{1, 0}, {0, 0}}), cuspg2::DomainError);
}

TEST_CASE("stabilizers") {
  CHECK(stabilizer_check(2, 3, {1, 4, -5}));
  for (auto [p, q] : {std::pair{2, 3}, {1, 4}, {2, 5}, {3, 7}}) CHECK(stabilizer_check(p, q, stabilizer_weights(p, q)));
  CHECK_FALSE(stabilizer_check(2, 3, {1, 0, 0}));
}

TEST_CASE("Aloff-Wallach indices") {
  CHECK(curve_exponents(1, 1) == std::pair<long, long>{1, -1});
  CHECK(aloff_wallach_indices(2, 3) == std::pair<long, long>{-8, 7});
  for (long p = -5; p <= 5; ++p)
    for (long q = -5; q <= 5; ++q) {
      const auto [k, l] = aloff_wallach_indices(p, q);
      CHECK(curve_exponents(k, l) == std::pair{p, q});
    }
  CHECK_FALSE(curve_exponents(1, 0).has_value());
}

TEST_CASE("Legendrian lift") {
  CHECK(legendrian_lift_smooth(2, 3));
  CHECK(legendrian_lift_smooth(1, 5));
  CHECK_FALSE(legendrian_lift_smooth(2, 5));
  const auto lift = legendrian_lift(2, 5);
  for (int k = 0; k < 3; ++k) {
    CHECK(lift.value_at_zero[k] == 0);
    CHECK(lift.velocity_at_zero[k] == 0);
  }
  CHECK(legendrian_lift(2, 3).velocity_at_zero[2] == Rational(3, 2));
}
