#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cuspg2 {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
Rational binomial(long n, long k);
Rational factorial(long n);
Rational pow(const Rational& base, long exponent);
/// num/den in lowest terms (the two-integer mpq_class constructor does not canonicalize).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Element of the field Q(i, √2, √5).
///
/// Coordinates are taken in the basis {1, i, √2, i√2, √5, i√5, √10, i√10}. The index of a
/// basis element encodes which generators it contains: bit 0 for i, bit 1 for √2 and bit 2
/// for √5, so products of basis elements are again basis elements (up to a rational factor).
class AlgebraicScalar {
 public:
  static constexpr std::size_t kDimension = 8;

  enum Basis : unsigned {
    kOne = 0,
    kI = 1,
    kSqrt2 = 2,
    kISqrt2 = 3,
    kSqrt5 = 4,
    kISqrt5 = 5,
    kSqrt10 = 6,
    kISqrt10 = 7,
  };

  AlgebraicScalar() = default;
  AlgebraicScalar(const Rational& q) { coords_[kOne] = q; }  // NOLINT: implicit embedding
  AlgebraicScalar(long n) { coords_[kOne] = n; }             // NOLINT: implicit embedding
  AlgebraicScalar(int n) : AlgebraicScalar(static_cast<long>(n)) {}  // NOLINT

  static AlgebraicScalar basis_element(unsigned index, const Rational& coefficient = 1);
  static AlgebraicScalar i() { return basis_element(kI); }
  static AlgebraicScalar sqrt2() { return basis_element(kSqrt2); }
  static AlgebraicScalar sqrt5() { return basis_element(kSqrt5); }
  static AlgebraicScalar sqrt10() { return basis_element(kSqrt10); }

  const Rational& operator[](std::size_t index) const { return coords_[index]; }
  const std::array<Rational, kDimension>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// True when every i-carrying coordinate vanishes.
  bool is_real() const;
  std::optional<Rational> as_rational() const;

  AlgebraicScalar real_part() const;
  AlgebraicScalar imag_part() const;

  /// Complex conjugation i ↦ −i.
  AlgebraicScalar conj() const { return galois(kI); }
  /// Field automorphism flipping the sign of every generator whose bit is set in `mask`.
  AlgebraicScalar galois(unsigned mask) const;
  /// Product of all eight Galois conjugates; a rational number, zero only for zero.
  Rational norm() const;
  AlgebraicScalar inverse() const;

  AlgebraicScalar operator-() const;
  AlgebraicScalar& operator+=(const AlgebraicScalar& other);
  AlgebraicScalar& operator-=(const AlgebraicScalar& other);
  AlgebraicScalar& operator*=(const AlgebraicScalar& other);
  AlgebraicScalar& operator/=(const AlgebraicScalar& other);

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
  friend AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    return a.coords_ == b.coords_;
  }

  /// Float view for human-readable annotations only.
  std::complex<double> approx() const;

  /// Signed sum over the basis symbols {1, i, r2, ir2, r5, ir5, r10, ir10} in basis order,
  /// e.g. "(-3)*i + (1/2)*r10". Zero serializes as "0".
  std::string to_string() const;
  static AlgebraicScalar parse(std::string_view text);

  static constexpr std::array<std::string_view, kDimension> kSymbols = {
      "1", "i", "r2", "ir2", "r5", "ir5", "r10", "ir10"};

 private:
  std::array<Rational, kDimension> coords_{};
};

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a);

}  // namespace cuspg2
