#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuspg2/polynomial.hpp"
#include "cuspg2/scalar.hpp"

namespace cuspg2::diffpoly {

/// Jet variables: x, y, y1..y9 and a free constant symbol κ (D_x κ = 0).
inline constexpr std::size_t kJetVars = 12;
inline constexpr int kMaxJetOrder = 9;
inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kKappa = 11;
/// Index of y_order (order 0 is y itself).
constexpr std::size_t jet(int order) { return static_cast<std::size_t>(1 + order); }

using JetPolynomial = Polynomial<kJetVars>;
using JetPoint = std::map<std::size_t, Rational>;

std::string variable_name(std::size_t v);
/// Inverse of variable_name ("x", "y", "y1".."y9", "k"); nothing for unknown names.
std::optional<std::size_t> variable_index(std::string_view name);

/// Derivation on the polynomial ring, applied termwise.
using PolynomialDerivation = std::function<JetPolynomial(const JetPolynomial&)>;

/// Exact rational function rest · Π nᵢ^{aᵢ} / Π dⱼ^{bⱼ} in the jet variables.
///
/// The nᵢ and dⱼ are primitive polynomials with positive leading coefficient; a factor never
/// appears on both sides. Keeping known factors separate lets large common powers cancel
/// structurally; remaining cancellations are found by reduce().
class JetFunction {
 public:
  using Factors = std::vector<std::pair<JetPolynomial, int>>;

  JetFunction() = default;
  JetFunction(const Rational& c) : rest_(c) {}  // NOLINT: constants embed implicitly
  JetFunction(long c) : rest_(Rational(c)) {}   // NOLINT
  JetFunction(int c) : rest_(Rational(c)) {}    // NOLINT
  JetFunction(JetPolynomial p);                 // NOLINT
  static JetFunction variable(std::size_t v) { return JetFunction(JetPolynomial::variable(v)); }
  /// num / den; throws DivisionByZero for a zero denominator.
  static JetFunction fraction(const JetPolynomial& num, const JetPolynomial& den);

  bool is_zero() const { return rest_.is_zero(); }
  bool depends_on(std::size_t v) const;
  /// Constant value when the function is a rational constant.
  std::optional<Rational> constant_value() const;

  JetPolynomial numerator() const;
  JetPolynomial denominator() const;
  const JetPolynomial& rest() const { return rest_; }
  const Factors& numerator_factors() const { return num_; }
  const Factors& denominator_factors() const { return den_; }

  JetFunction operator-() const;
  friend JetFunction operator+(const JetFunction& a, const JetFunction& b) { return combine(a, b, false); }
  friend JetFunction operator-(const JetFunction& a, const JetFunction& b) { return combine(a, b, true); }
  friend JetFunction operator*(const JetFunction& a, const JetFunction& b);
  friend JetFunction operator/(const JetFunction& a, const JetFunction& b) { return a * b.inverse(); }
  JetFunction& operator+=(const JetFunction& b) { return *this = *this + b; }
  JetFunction& operator-=(const JetFunction& b) { return *this = *this - b; }
  JetFunction& operator*=(const JetFunction& b) { return *this = *this * b; }
  JetFunction& operator/=(const JetFunction& b) { return *this = *this / b; }
  /// Exact equality (the difference has zero numerator).
  friend bool operator==(const JetFunction& a, const JetFunction& b) { return (a - b).is_zero(); }

  JetFunction inverse() const;
  JetFunction pow(int k) const;

  /// Applies a derivation of the polynomial ring, extended by the quotient rule.
  JetFunction derive(const PolynomialDerivation& d) const;
  JetFunction partial(std::size_t v) const;
  /// D_x = ∂/∂x + Σ y_{k+1}∂/∂y_k on the free jet space. Throws DomainError if y9 occurs.
  JetFunction total_derivative() const;

  /// Cancels every denominator factor that divides the numerator remainder.
  JetFunction reduced() const;
  /// reduced(), and for functions of a single variable also the full numerator/denominator gcd
  /// cancelled, so that equal univariate functions serialize identically.
  JetFunction canonical() const;

  /// Throws DivisionByZero at a pole and DomainError if a needed variable is unset.
  Rational evaluate(const JetPoint& point) const;
  /// Substitutes functions for variables (others are left alone).
  JetFunction substitute(const std::map<std::size_t, JetFunction>& images) const;

  /// "num" or "(num)/(den)" with expanded, reduced numerator and denominator.
  std::string to_string() const;

 private:
  static JetFunction combine(const JetFunction& a, const JetFunction& b, bool subtract);
  void normalize();
  static void add_factor(Factors& list, const JetPolynomial& f, int e);
  void absorb_denominator(const JetPolynomial& d);

  JetPolynomial rest_;
  Factors num_;
  Factors den_;
};

JetFunction operator*(const JetFunction& a, const JetFunction& b);

/// Base R = c · Π fᵢ^{mᵢ} of the cube-root generator u (u³ = R), kept in factored form so
/// that logarithmic derivatives stay small.
struct CubeRootBase {
  Rational constant = 1;
  std::vector<std::pair<JetFunction, int>> factors;

  static CubeRootBase from(const JetFunction& r);
  JetFunction value() const;
  friend bool operator==(const CubeRootBase& a, const CubeRootBase& b);
};

class ExtendedJetFunction;

/// The on-equation total derivative: D_x with y_n replaced by F. Order 0 means the free D_x.
struct Equation {
  int order = 0;
  std::shared_ptr<const ExtendedJetFunction> rhs;
};

/// f₀ + f₁u + f₂u² with u³ = R.
class ExtendedJetFunction {
 public:
  ExtendedJetFunction() = default;
  ExtendedJetFunction(JetFunction f0) { c_[0] = std::move(f0); }  // NOLINT
  ExtendedJetFunction(const Rational& c) : ExtendedJetFunction(JetFunction(c)) {}  // NOLINT
  ExtendedJetFunction(int c) : ExtendedJetFunction(JetFunction(c)) {}  // NOLINT
  ExtendedJetFunction(std::array<JetFunction, 3> c, std::shared_ptr<const CubeRootBase> base);
  /// The generator u itself.
  static ExtendedJetFunction generator(std::shared_ptr<const CubeRootBase> base);

  const JetFunction& component(int k) const { return c_[k]; }
  const std::shared_ptr<const CubeRootBase>& base() const { return base_; }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }
  bool is_zero() const { return c_[0].is_zero() && is_rational(); }

  ExtendedJetFunction operator-() const;
  friend ExtendedJetFunction operator+(const ExtendedJetFunction& a, const ExtendedJetFunction& b);
  friend ExtendedJetFunction operator-(const ExtendedJetFunction& a, const ExtendedJetFunction& b);
  friend ExtendedJetFunction operator*(const ExtendedJetFunction& a, const ExtendedJetFunction& b);
  /// Division by a function in the base field.
  friend ExtendedJetFunction operator/(const ExtendedJetFunction& a, const JetFunction& b);
  friend bool operator==(const ExtendedJetFunction& a, const ExtendedJetFunction& b) { return (a - b).is_zero(); }

  ExtendedJetFunction partial(std::size_t v) const;
  ExtendedJetFunction total_derivative(const Equation& eq = {}) const;
  ExtendedJetFunction reduced() const;

  /// Exact value; needs R(point) to be the cube of a rational unless f₁ = f₂ = 0 there.
  Rational evaluate(const JetPoint& point) const;

  std::string to_string() const;

 private:
  std::array<JetFunction, 3> c_{};
  std::shared_ptr<const CubeRootBase> base_;
};

/// D_x of a base-field function on the equation y_n = F (free D_x when eq.order == 0).
/// Throws DomainError if f involves y_n or higher with an equation given.
ExtendedJetFunction total_derivative(const JetFunction& f, const Equation& eq);

/// Parses a jet expression over x, y, y1..y9 and k (κ) with + - * / ^ and parentheses.
JetFunction parse_jet_expression(std::string_view text);

}  // namespace cuspg2::diffpoly
