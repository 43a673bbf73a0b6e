#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cuspg2/errors.hpp"
#include "cuspg2/scalar.hpp"

namespace cuspg2::binform {

/// Homogeneous polynomial Σ C(n,k) v_k t^{n−k} s^k in the variables (s, t).
///
/// `T` is the coefficient domain: Rational or AlgebraicScalar for numeric forms, or any
/// module over the rationals (e.g. linear combinations of one-forms) when only linear
/// operations are needed.
template <class T>
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<T> v) : v_(std::move(v)) {
    if (v_.empty()) throw DomainError("binary form needs at least one coefficient");
  }

  static BinaryForm zero(int degree) { return BinaryForm(std::vector<T>(degree + 1)); }

  /// Builds the form from plain monomial coefficients m_k of t^{n−k} s^k.
  static BinaryForm from_monomials(const std::vector<T>& m) {
    const int n = static_cast<int>(m.size()) - 1;
    std::vector<T> v;
    v.reserve(m.size());
    for (int k = 0; k <= n; ++k) v.push_back(T(m[k] * Rational(Rational(1) / binomial(n, k))));
    return BinaryForm(std::move(v));
  }

  int degree() const { return static_cast<int>(v_.size()) - 1; }
  const std::vector<T>& coefficients() const { return v_; }
  const T& operator[](std::size_t k) const { return v_[k]; }

  std::vector<T> monomials() const {
    std::vector<T> m;
    m.reserve(v_.size());
    for (int k = 0; k <= degree(); ++k) m.push_back(T(v_[k] * binomial(degree(), k)));
    return m;
  }

  T evaluate(const T& s, const T& t) const {
    T total{};
    const auto m = monomials();
    for (int k = 0; k <= degree(); ++k) {
      T term = m[k];
      for (int j = 0; j < degree() - k; ++j) term = T(term * t);
      for (int j = 0; j < k; ++j) term = T(term * s);
      total = T(total + term);
    }
    return total;
  }

  BinaryForm& operator+=(const BinaryForm& other) {
    check_same_degree(other);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] = T(v_[k] + other.v_[k]);
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& other) {
    check_same_degree(other);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] = T(v_[k] - other.v_[k]);
    return *this;
  }
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const T& c, BinaryForm a) {
    for (auto& x : a.v_) x = T(c * x);
    return a;
  }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.v_ == b.v_; }

  /// "v0=..., v1=..., ..." using the coefficient type's own serialization.
  std::string to_string() const {
    std::ostringstream os;
    for (int k = 0; k <= degree(); ++k) os << (k ? ", " : "") << 'v' << k << '=' << str(v_[k]);
    return os.str();
  }

  /// Human-readable polynomial, e.g. "2*t^6 + 6*(1/3)*t^5*s".
  std::string pretty() const {
    std::ostringstream os;
    bool first = true;
    const auto m = monomials();
    for (int k = 0; k <= degree(); ++k) {
      if (m[k] == T{}) continue;
      if (!first) os << " + ";
      os << '(' << str(m[k]) << ')';
      const int tp = degree() - k;
      if (tp > 0) os << "*t" << (tp > 1 ? "^" + std::to_string(tp) : "");
      if (k > 0) os << "*s" << (k > 1 ? "^" + std::to_string(k) : "");
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  static std::string str(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
      return x.get_str();
    } else {
      return x.to_string();
    }
  }
  void check_same_degree(const BinaryForm& other) const {
    if (other.degree() != degree()) throw DomainError("binary forms of different degree");
  }

  std::vector<T> v_;
};

namespace detail {

// Dense monomial arrays: m[k] is the coefficient of t^{n−k} s^k.
template <class T>
std::vector<T> d_dt(const std::vector<T>& m) {
  const int n = static_cast<int>(m.size()) - 1;
  if (n == 0) return {T{}};
  std::vector<T> r(n);
  for (int k = 0; k < n; ++k) r[k] = T(m[k] * Rational(n - k));
  return r;
}

template <class T>
std::vector<T> d_ds(const std::vector<T>& m) {
  const int n = static_cast<int>(m.size()) - 1;
  if (n == 0) return {T{}};
  std::vector<T> r(n);
  for (int k = 1; k <= n; ++k) r[k - 1] = T(m[k] * Rational(k));
  return r;
}

template <class T>
std::vector<T> product(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == T{}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = T(r[i + j] + T(a[i] * b[j]));
  }
  return r;
}

template <class T>
std::vector<T> mixed_partial(std::vector<T> m, int t_order, int s_order) {
  for (int j = 0; j < t_order; ++j) m = d_dt(m);
  for (int j = 0; j < s_order; ++j) m = d_ds(m);
  return m;
}

}  // namespace detail

enum class Normalization {
  /// (1/p!) Σ (−1)^i C(p,i) ∂^pU/∂t^{p−i}∂s^i · ∂^pV/∂t^i∂s^{p−i}, exactly as displayed.
  kPrinted,
  /// Printed transvectant rescaled by the calibration constant c(n, m, p).
  kCalibrated,
};

/// Calibration constants c(n,m,p) for which the classical identities hold verbatim:
/// c(6,6,6)·⟨V,V⟩₆ = I₂(V) and c(6,6,6)·c(6,6,3)·⟨⟨U,V⟩₃,W⟩₆ equals the trilinear bracket of
/// the G₂ three-form. Returns nothing for degree triples with no calibration.
std::optional<Rational> calibration_constant(int n, int m, int p);

template <class T>
BinaryForm<T> transvectant(const BinaryForm<T>& u, const BinaryForm<T>& v, int p,
                           Normalization normalization = Normalization::kPrinted) {
  const int n = u.degree();
  const int m = v.degree();
  if (p < 0 || p > n || p > m) throw DomainError("transvectant order exceeds form degree");
  const auto mu = u.monomials();
  const auto mv = v.monomials();
  std::vector<T> acc(n + m - 2 * p + 1);
  for (int i = 0; i <= p; ++i) {
    const auto du = detail::mixed_partial(mu, p - i, i);
    const auto dv = detail::mixed_partial(mv, i, p - i);
    const auto prod = detail::product(du, dv);
    Rational weight = binomial(p, i);
    if (i % 2 == 1) weight = -weight;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = T(acc[k] + T(prod[k] * weight));
  }
  Rational scale = Rational(1) / factorial(p);
  if (normalization == Normalization::kCalibrated) {
    const auto c = calibration_constant(n, m, p);
    if (!c) throw DomainError("no calibration constant for this transvectant");
    scale *= *c;
  }
  for (auto& x : acc) x = T(x * scale);
  return BinaryForm<T>::from_monomials(acc);
}

/// I₂(V) = v₀v₆ − 6v₁v₅ + 15v₂v₄ − 10v₃².
template <class T>
T invariant_i2(const BinaryForm<T>& v) {
  if (v.degree() != 6) throw DomainError("I2 needs a sextic");
  T r = T(v[0] * v[6]);
  r = T(r - T(Rational(6) * T(v[1] * v[5])));
  r = T(r + T(Rational(15) * T(v[2] * v[4])));
  r = T(r - T(Rational(10) * T(v[3] * v[3])));
  return r;
}

/// I₃(U,V,W) = ⟨⟨U,V⟩₃, W⟩₆ with calibrated transvectants.
template <class T>
T invariant_i3(const BinaryForm<T>& u, const BinaryForm<T>& v, const BinaryForm<T>& w) {
  if (u.degree() != 6 || v.degree() != 6 || w.degree() != 6) throw DomainError("I3 needs three sextics");
  const auto inner = transvectant(u, v, 3, Normalization::kCalibrated);
  return transvectant(inner, w, 6, Normalization::kCalibrated)[0];
}

template <class T>
using Matrix2 = std::array<std::array<T, 2>, 2>;

/// Induced action P̂(t,s) = P(N·(t,s)) of GL(2) on forms (exact substitution).
template <class T>
BinaryForm<T> act(const BinaryForm<T>& form, const Matrix2<T>& n_mat) {
  const int n = form.degree();
  const std::vector<T> new_t = {n_mat[0][0], n_mat[0][1]};  // t ↦ N₁₁t + N₁₂s
  const std::vector<T> new_s = {n_mat[1][0], n_mat[1][1]};  // s ↦ N₂₁t + N₂₂s
  const auto m = form.monomials();
  std::vector<T> acc(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (m[k] == T{}) continue;
    std::vector<T> term = {m[k]};
    for (int j = 0; j < n - k; ++j) term = detail::product(term, new_t);
    for (int j = 0; j < k; ++j) term = detail::product(term, new_s);
    for (int j = 0; j <= n; ++j) acc[j] = T(acc[j] + term[j]);
  }
  return BinaryForm<T>::from_monomials(acc);
}

/// Parses "v0=1, v1=0, ..." (or a bare comma-separated list) of rationals.
BinaryForm<Rational> parse_rational_form(std::string_view text);

}  // namespace cuspg2::binform
