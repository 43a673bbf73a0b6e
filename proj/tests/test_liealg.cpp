#include "cuspg2/errors.hpp"
#include "cuspg2/liealg.hpp"
#include "doctest.h"

using namespace cuspg2::liealg;
using cuspg2::AlgebraicScalar;
using cuspg2::Rational;
using cuspg2::exterior::ExteriorForm;

TEST_CASE("commutators") {
  const auto e = su21_frame();
  CHECK(commutator(e[7], e[0]) == AlgebraicScalar(9) * e[4]);
  CHECK(commutator(e[7], e[4]) == AlgebraicScalar(-9) * e[0]);
  CHECK(commutator(e[2], e[2]).is_zero());
  CHECK(e[7] == Matrix3::diagonal(AlgebraicScalar::i(), AlgebraicScalar(4) * AlgebraicScalar::i(),
                                  AlgebraicScalar(-5) * AlgebraicScalar::i()));
}

TEST_CASE("structure constants") {
  const auto sc = extract_structure_constants(su21_frame());
  CHECK(sc.is_antisymmetric());
  CHECK(sc.satisfies_jacobi());
  CHECK(sc(8, 1, 5) == 9);
  CHECK(sc(8, 5, 1) == -9);
}

TEST_CASE("closure failure and dependent bases") {
  auto e = su21_frame();
  e[7] = Matrix3::identity();  // not in sl(3), commutators leave the span
  CHECK_THROWS_AS(extract_structure_constants(e), cuspg2::DomainError);
  auto f = su21_frame();
  f[7] = f[6];
  CHECK_THROWS_AS(extract_structure_constants(f), cuspg2::DomainError);
}

TEST_CASE("membership and invariant Hermitian form") {
  const auto e = su21_frame();
  const auto eta = hermitian_form(e);
  CHECK(eta == Matrix3::diagonal(1, 1, -1));
  for (const auto& x : e) {
    CHECK(is_traceless(x));
    CHECK(preserves_form(x, eta));
  }
}

TEST_CASE("sigma in theta") {
  const auto s = sigma_in_theta(su21_frame());
  const auto r2 = AlgebraicScalar::sqrt2();
  const auto i = AlgebraicScalar::i();
  CHECK(s[0][2] == r2 * (ExteriorForm::theta(2) - ExteriorForm::theta(6, i)));
  CHECK(s[1][2] == (r2 * Rational(1, 2)) * (ExteriorForm::theta(1) + ExteriorForm::theta(5, i)));
  const auto r10_2 = AlgebraicScalar::sqrt10() * Rational(1, 2);
  CHECK(s[0][1] == r10_2 * (ExteriorForm::theta(7, i) - ExteriorForm::theta(3)));
  // The diagonal combination lands on θ⁴.
  CHECK(s[1][1] - AlgebraicScalar(4) * s[0][0] == ExteriorForm::theta(4, AlgebraicScalar(2) * i * AlgebraicScalar::sqrt10()));
  // Reality conditions.
  auto conj = [](const ExteriorForm& f) {
    ExteriorForm r(f.degree());
    for (const auto& [m, c] : f.terms()) r += ExteriorForm::from_mask(m, c.conj());
    return r;
  };
  CHECK(s[1][0] == -conj(s[0][1]));
  CHECK(s[2][0] == conj(s[0][2]));
  CHECK(s[2][1] == conj(s[1][2]));
}

TEST_CASE("Maurer-Cartan equation") {
  const auto sc = extract_structure_constants(su21_frame());
  const cuspg2::exterior::Differential d(sc);
  const auto s = sigma_in_theta(su21_frame());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ExteriorForm rhs = d(s[a][b]);
      for (int c = 0; c < 3; ++c) rhs += cuspg2::exterior::wedge(s[a][c], s[c][b]);
      CHECK(rhs.is_zero());
    }
}

TEST_CASE("matrix text round trip") {
  for (const auto& x : su21_frame()) CHECK(Matrix3::parse(x.to_string()) == x);
  CHECK_THROWS_AS(Matrix3::parse("[1, 2; 3]"), cuspg2::ParseError);
}
