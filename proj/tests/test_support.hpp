#pragma once

#include <random>

#include "cuspg2/scalar.hpp"

namespace test_support {

inline cuspg2::Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  cuspg2::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline cuspg2::AlgebraicScalar random_scalar(std::mt19937_64& rng, bool real_only = false) {
  cuspg2::AlgebraicScalar a;
  for (unsigned k = 0; k < cuspg2::AlgebraicScalar::kDimension; ++k) {
    if (real_only && (k & 1u)) continue;
    a += cuspg2::AlgebraicScalar::basis_element(k, random_rational(rng));
  }
  return a;
}

}  // namespace test_support
