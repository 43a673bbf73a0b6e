#include <random>

#include "cuspg2/errors.hpp"
#include "cuspg2/exterior.hpp"
#include "cuspg2/liealg.hpp"
#include "cuspg2/reference.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cuspg2::exterior;

namespace {

ExteriorForm random_form(std::mt19937_64& rng, int degree, bool basic) {
  ExteriorForm f(degree);
  const unsigned limit = basic ? 128 : 256;
  for (unsigned mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) == degree && rng() % 3 == 0)
      f += ExteriorForm::from_mask(static_cast<Mask>(mask), test_support::random_scalar(rng, true));
  return f;
}

const StructureConstants& su21() {
  static const auto sc = cuspg2::liealg::extract_structure_constants(cuspg2::liealg::su21_frame());
  return sc;
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(ExteriorForm::theta(1), ExteriorForm::theta(2)) == ExteriorForm::monomial({1, 2}));
  CHECK(wedge(ExteriorForm::theta(2), ExteriorForm::theta(1)) == -ExteriorForm::monomial({1, 2}));
  CHECK(wedge(ExteriorForm::theta(1), ExteriorForm::theta(1)).is_zero());
  CHECK(wedge(ExteriorForm::monomial({1, 2, 3}), ExteriorForm::monomial({4, 5, 6, 7})) ==
        ExteriorForm::from_mask(kVolume7));
  const auto overflow = wedge(ExteriorForm::monomial({1, 2, 3, 4, 5}), ExteriorForm::monomial({6, 7, 8, 1}));
  CHECK(overflow.is_zero());
  CHECK(overflow.degree() == 9);
}

TEST_CASE("graded commutativity and associativity") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = trial % 4, q = (trial / 4) % 4;
    const auto a = random_form(rng, p, false), b = random_form(rng, q, false), c = random_form(rng, 1, false);
    const cuspg2::AlgebraicScalar sign((p * q) % 2 ? -1 : 1);
    CHECK(wedge(a, b) == sign * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("exterior derivative from su(2,1)") {
  const auto expected = cuspg2::reference::structure_equations();
  for (int l = 1; l <= 8; ++l) CHECK(su21().dtheta(l) == expected[l - 1]);
  const Differential d(su21());
  for (unsigned mask = 0; mask < 256; ++mask) CHECK(d(d(ExteriorForm::from_mask(static_cast<Mask>(mask)))).is_zero());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = trial % 4;
    const auto a = random_form(rng, p, false), b = random_form(rng, 2, false);
    const cuspg2::AlgebraicScalar sign(p % 2 ? -1 : 1);
    CHECK(d(wedge(a, b)) == wedge(d(a), b) + sign * wedge(a, d(b)));
  }
}

TEST_CASE("Hodge star") {
  CHECK(hodge_star(ExteriorForm::monomial({1, 2, 3})) == ExteriorForm::monomial({4, 5, 6, 7}));
  CHECK(hodge_star(ExteriorForm::constant(1)) == ExteriorForm::from_mask(kVolume7));
  CHECK(hodge_star(hodge_star(ExteriorForm::monomial({1, 4, 5}))) == ExteriorForm::monomial({1, 4, 5}));
  CHECK_THROWS_AS(hodge_star(ExteriorForm::theta(8)), cuspg2::DomainError);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = trial % 8;
    const auto a = random_form(rng, k, true), b = random_form(rng, k, true);
    CHECK(hodge_star(hodge_star(a)) == a);
    CHECK(wedge(a, hodge_star(b)) == wedge(b, hodge_star(a)));
    CHECK(wedge(a, hodge_star(b)) == inner_product(a, b) * volume_form());
    CHECK(hodge_star(hodge_star(a, Orientation::kNegative), Orientation::kNegative) == a);
  }
}

TEST_CASE("inner product") {
  CHECK(inner_product(ExteriorForm::monomial({1, 2, 3}), ExteriorForm::monomial({1, 2, 3})) == 1);
  CHECK(inner_product(ExteriorForm::monomial({1, 2, 3}), ExteriorForm::monomial({1, 4, 5})) == 0);
  const auto phi = cuspg2::reference::g2_three_form();
  CHECK(inner_product(phi, phi) == 7);
  CHECK_THROWS_AS(inner_product(phi, ExteriorForm::theta(1)), cuspg2::DomainError);
}

TEST_CASE("interior product and pullback") {
  std::array<cuspg2::AlgebraicScalar, kGenerators> e1{};
  e1[0] = 1;
  CHECK(interior(e1, ExteriorForm::monomial({1, 2, 3})) == ExteriorForm::monomial({2, 3}));
  std::array<cuspg2::AlgebraicScalar, kGenerators> e2{};
  e2[1] = 1;
  CHECK(interior(e2, ExteriorForm::monomial({1, 2, 3})) == -ExteriorForm::monomial({1, 3}));
  std::array<ExteriorForm, kGenerators> images;
  for (int k = 0; k < kGenerators; ++k) images[k] = ExteriorForm::theta(k + 1);
  images[0] = ExteriorForm::theta(1) + ExteriorForm::theta(2);
  CHECK(pullback(ExteriorForm::monomial({1, 2}), images) == ExteriorForm::monomial({1, 2}));
  CHECK(pullback(ExteriorForm::monomial({1, 3}), images) ==
        ExteriorForm::monomial({1, 3}) + ExteriorForm::monomial({2, 3}));
}

TEST_CASE("text form") {
  CHECK(cuspg2::reference::g2_three_form().to_string().find("(-1)*th257") != std::string::npos);
  CHECK(ExteriorForm(3).to_string() == "0");
}
