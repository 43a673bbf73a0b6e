#include "cuspg2/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "cuspg2/errors.hpp"

namespace cuspg2 {

namespace {

// Rational factor picked up when multiplying basis elements `a` and `b`: i·i = −1,
// √2·√2 = 2, √5·√5 = 5. The product basis element is a ^ b.
Rational basis_product_factor(unsigned a, unsigned b) {
  const unsigned shared = a & b;
  long factor = 1;
  if (shared & 1u) factor = -factor;
  if (shared & 2u) factor *= 2;
  if (shared & 4u) factor *= 5;
  return Rational(factor);
}

const std::array<std::array<Rational, 8>, 8>& product_table() {
  static const auto table = [] {
    std::array<std::array<Rational, 8>, 8> t;
    for (unsigned a = 0; a < 8; ++a)
      for (unsigned b = 0; b < 8; ++b) t[a][b] = basis_product_factor(a, b);
    return t;
  }();
  return table;
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  AlgebraicScalar parse() {
    AlgebraicScalar result;
    skip_space();
    if (at_end()) throw ParseError("empty scalar", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (consume_minus()) {
        sign = -1;
      } else if (peek() == '+') {
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      skip_space();
      result += AlgebraicScalar(Rational(sign)) * parse_term();
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  AlgebraicScalar parse_term() {
    Rational coefficient = 1;
    bool have_coefficient = false;
    if (peek() == '(') {
      ++pos_;
      skip_space();
      int sign = 1;
      if (consume_minus()) sign = -1;
      skip_space();
      coefficient = parse_unsigned_rational() * sign;
      skip_space();
      expect(')');
      have_coefficient = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_unsigned_rational();
      have_coefficient = true;
    }
    skip_space();
    if (have_coefficient) {
      if (peek() != '*') return AlgebraicScalar(coefficient);
      ++pos_;
      skip_space();
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view symbol = text_.substr(start, pos_ - start);
    for (unsigned k = 0; k < AlgebraicScalar::kDimension; ++k) {
      if (symbol == AlgebraicScalar::kSymbols[k]) return AlgebraicScalar::basis_element(k, coefficient);
    }
    throw ParseError("unknown basis symbol '" + std::string(symbol) + "'", start);
  }

  Rational parse_unsigned_rational() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    if (start == pos_) throw ParseError("expected rational literal", start);
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const DomainError&) {
      throw ParseError("malformed rational literal", start);
    }
  }

  // Accepts ASCII '-' and the UTF-8 minus sign U+2212.
  bool consume_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw DomainError("malformed rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

AlgebraicScalar AlgebraicScalar::basis_element(unsigned index, const Rational& coefficient) {
  AlgebraicScalar a;
  a.coords_.at(index) = coefficient;
  return a;
}

bool AlgebraicScalar::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool AlgebraicScalar::is_rational() const {
  for (std::size_t k = 1; k < kDimension; ++k)
    if (coords_[k] != 0) return false;
  return true;
}

bool AlgebraicScalar::is_real() const {
  for (std::size_t k = 1; k < kDimension; k += 2)
    if (coords_[k] != 0) return false;
  return true;
}

std::optional<Rational> AlgebraicScalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coords_[kOne];
}

AlgebraicScalar AlgebraicScalar::real_part() const {
  AlgebraicScalar r;
  for (std::size_t k = 0; k < kDimension; k += 2) r.coords_[k] = coords_[k];
  return r;
}

// Imaginary part as a real field element: a = re + i·im.
AlgebraicScalar AlgebraicScalar::imag_part() const {
  AlgebraicScalar r;
  for (std::size_t k = 1; k < kDimension; k += 2) r.coords_[k - 1] = coords_[k];
  return r;
}

AlgebraicScalar AlgebraicScalar::galois(unsigned mask) const {
  AlgebraicScalar r = *this;
  for (unsigned k = 0; k < kDimension; ++k)
    if (__builtin_popcount(k & mask) % 2 == 1) r.coords_[k] = -r.coords_[k];
  return r;
}

Rational AlgebraicScalar::norm() const {
  AlgebraicScalar product = *this;
  for (unsigned mask = 1; mask < kDimension; ++mask) product *= galois(mask);
  // The product is fixed by every automorphism, hence rational.
  return product.coords_[kOne];
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero algebraic scalar");
  if (is_rational()) return AlgebraicScalar(Rational(1) / coords_[kOne]);
  AlgebraicScalar cofactor(1);
  for (unsigned mask = 1; mask < kDimension; ++mask) cofactor *= galois(mask);
  const Rational n = (*this * cofactor).coords_[kOne];
  AlgebraicScalar r = cofactor;
  for (auto& c : r.coords_) c /= n;
  return r;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar r;
  for (std::size_t k = 0; k < kDimension; ++k) r.coords_[k] = -coords_[k];
  return r;
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& other) {
  for (std::size_t k = 0; k < kDimension; ++k) coords_[k] += other.coords_[k];
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& other) {
  for (std::size_t k = 0; k < kDimension; ++k) coords_[k] -= other.coords_[k];
  return *this;
}

AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (a.is_rational()) {
    AlgebraicScalar r = b;
    if (a.coords_[0] != 1)
      for (auto& c : r.coords_) c *= a.coords_[0];
    return r;
  }
  if (b.is_rational()) return b * a;
  const auto& table = product_table();
  AlgebraicScalar r;
  Rational term;
  for (unsigned i = 0; i < AlgebraicScalar::kDimension; ++i) {
    if (a.coords_[i] == 0) continue;
    for (unsigned j = 0; j < AlgebraicScalar::kDimension; ++j) {
      if (b.coords_[j] == 0) continue;
      term = a.coords_[i] * b.coords_[j];
      term *= table[i][j];
      r.coords_[i ^ j] += term;
    }
  }
  return r;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& other) {
  *this = *this * other;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& other) {
  *this = *this * other.inverse();
  return *this;
}

std::complex<double> AlgebraicScalar::approx() const {
  static const std::array<double, kDimension> real_values = {
      1.0, 0.0, std::sqrt(2.0), 0.0, std::sqrt(5.0), 0.0, std::sqrt(10.0), 0.0};
  static const std::array<double, kDimension> imag_values = {
      0.0, 1.0, 0.0, std::sqrt(2.0), 0.0, std::sqrt(5.0), 0.0, std::sqrt(10.0)};
  std::complex<double> z;
  for (std::size_t k = 0; k < kDimension; ++k) {
    const double c = coords_[k].get_d();
    z += std::complex<double>(c * real_values[k], c * imag_values[k]);
  }
  return z;
}

std::string AlgebraicScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < kDimension; ++k) {
    if (coords_[k] == 0) continue;
    if (!first) os << " + ";
    os << '(' << coords_[k].get_str() << ')';
    if (k != kOne) os << '*' << kSymbols[k];
    first = false;
  }
  return first ? "0" : os.str();
}

AlgebraicScalar AlgebraicScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a) { return os << a.to_string(); }

}  // namespace cuspg2
