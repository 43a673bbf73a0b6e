#include "cuspg2/reference.hpp"

namespace cuspg2::reference {

using exterior::ExteriorForm;
using exterior::Scalar;

namespace {

Scalar r10(long num, long den) { return Scalar::sqrt10() * ratio(num, den); }
ExteriorForm t(int j, int k, const Scalar& c) { return ExteriorForm::monomial({j, k}, c); }

}  // namespace

std::array<ExteriorForm, 8> structure_equations() {
  return {
      t(2, 3, r10(1, 1)) + t(4, 5, r10(1, 7)) + t(5, 8, -9) + t(6, 7, r10(1, 1)),
      t(1, 3, r10(-1, 4)) + t(4, 6, r10(4, 7)) + t(5, 7, r10(-1, 4)) + t(6, 8, 6),
      t(1, 2, r10(-1, 5)) + t(4, 7, r10(5, 7)) + t(5, 6, r10(1, 5)) + t(7, 8, -3),
      t(1, 5, r10(1, 20)) + t(2, 6, r10(4, 5)) + t(3, 7, r10(-5, 4)),
      t(1, 4, r10(1, 7)) + t(1, 8, 9) + t(2, 7, r10(1, 1)) + t(3, 6, r10(1, 1)),
      t(1, 7, r10(-1, 4)) + t(2, 4, r10(4, 7)) + t(2, 8, -6) + t(3, 5, r10(-1, 4)),
      t(1, 6, r10(-1, 5)) + t(2, 5, r10(1, 5)) + t(3, 4, r10(5, 7)) + t(3, 8, 3),
      t(1, 5, Rational(3, 14)) + t(2, 6, Rational(-4, 7)) + t(3, 7, Rational(-5, 14)),
  };
}

ExteriorForm g2_three_form() {
  return ExteriorForm::monomial({1, 2, 3}) + ExteriorForm::monomial({1, 4, 5}) +
         ExteriorForm::monomial({1, 6, 7}) + ExteriorForm::monomial({2, 4, 6}) -
         ExteriorForm::monomial({2, 5, 7}) - ExteriorForm::monomial({3, 4, 7}) -
         ExteriorForm::monomial({3, 5, 6});
}

orbit::CoframeSextic cubic_sextic() {
  using orbit::SigmaLinear;
  auto sym = [](int a, int b) { return SigmaLinear::symbol(a, b); };
  return orbit::CoframeSextic::from_monomials({
      sym(3, 2),
      sym(3, 1),
      sym(1, 2) * Scalar(-3),
      sym(3, 3) + sym(2, 2) * Scalar(2) - sym(1, 1) * Scalar(3),
      sym(2, 1) * Scalar(2),
      sym(1, 3) * Scalar(-3),
      sym(2, 3) * Scalar(2),
  });
}

orbit::Gram cubic_family_metric() {
  using orbit::operator+;
  using orbit::scale;
  using orbit::symmetric_product;
  auto sym = [](int a, int b) { return orbit::SigmaLinear::symbol(a, b); };
  const auto diag = sym(1, 1) * Scalar(4) - sym(2, 2);
  return scale(symmetric_product(sym(3, 2), sym(2, 3)), 2) + scale(symmetric_product(sym(3, 1), sym(1, 3)), ratio(1, 2)) +
         scale(symmetric_product(sym(1, 2), sym(2, 1)), ratio(-2, 5)) +
         scale(symmetric_product(diag, diag), ratio(-1, 40));
}

}  // namespace cuspg2::reference
