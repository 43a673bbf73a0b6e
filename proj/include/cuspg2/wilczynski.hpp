#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cuspg2/diffpoly.hpp"
#include "cuspg2/polynomial.hpp"
#include "cuspg2/scalar.hpp"

namespace cuspg2::wilczynski {

using diffpoly::ExtendedJetFunction;
using diffpoly::JetFunction;
using diffpoly::JetPoint;

// ---------------------------------------------------------------------------------------------
// Abstract coefficient ring: p_i^{(k)} for i = 1..7, k = 0..7, and η.

inline constexpr int kMaxOrder = 7;
inline constexpr int kMaxDerivative = 7;
inline constexpr std::size_t kAbstractVars = kMaxOrder * (kMaxDerivative + 1) + 1;
inline constexpr std::size_t kEta = kAbstractVars - 1;
constexpr std::size_t coefficient_var(int i, int k) {
  return static_cast<std::size_t>((i - 1) * (kMaxDerivative + 1) + k);
}

using AbstractPolynomial = Polynomial<kAbstractVars>;

/// "p1", "p1'", "p2''", "p1^(4)", "eta".
std::string abstract_name(std::size_t v);
std::string to_string(const AbstractPolynomial& p);
AbstractPolynomial p(int i, int k = 0);

/// Formal derivation ∂p_i^{(k)} = p_i^{(k+1)}, ∂η = η²/2 + 6/(n+1)·P₂ for order n.
AbstractPolynomial abstract_derivative(const AbstractPolynomial& f, int n);

/// Semi-canonical coefficients P₀..P_n (P₀ = 1, P₁ = 0) after Y = λZ with λ′/λ = −p₁.
const std::vector<AbstractPolynomial>& semi_invariants(int n);

/// Θ₃..Θ_n (index r) from the Laguerre–Forsyth reduction; guaranteed free of η.
/// Throws InvariantViolation if any η-term survives.
const std::map<int, AbstractPolynomial>& classical_theta(int n);

// ---------------------------------------------------------------------------------------------
// Linear equations Y⁽ⁿ⁾ + C(n,1)p₁Y⁽ⁿ⁻¹⁾ + ... + p_nY = 0 with coefficients rational in x.

struct LinearODE {
  int order = 3;
  std::vector<JetFunction> p;  // p[i-1] = p_i
};

/// y = f(x) as the solution set spanned by [1, x, f]: p₁ = −f‴/(3f″), p₂ = p₃ = 0.
LinearODE graph_ode(const JetFunction& f);
/// Order-3 equation with solution basis given by derivative tables d[i][k] = y_i^{(k)}, k = 0..3.
/// Transcendental basis values may be represented by a free symbol (e.g. y for ln x).
LinearODE ode_from_basis(const std::array<std::array<JetFunction, 4>, 3>& d);
/// The graph of x^γ: p₁ = (2 − γ)/(3x).
LinearODE power_curve_ode(const Rational& gamma);
/// The graph of ln x, via ode_from_basis.
LinearODE log_curve_ode();

/// Classical invariants of a linear equation (p_i^{(k)} ↦ D_x^k p_i).
std::map<int, JetFunction> classical_theta(const LinearODE& ode);
/// P₂ of a linear equation.
JetFunction semi_invariant(const LinearODE& ode, int k);

// ---------------------------------------------------------------------------------------------
// Projective curvature of plane curves y = y(x) in jet coordinates.

/// 9y₂²y₅ − 45y₂y₃y₄ + 40y₃³.
JetFunction halphen_numerator();
/// The Halphen expression divided by y₂³.
JetFunction halphen_theta3();
/// Θ₃ = P₃ − (3/2)P₂′ on graphs (p₁ = −y₃/(3y₂)); equals halphen_theta3()/(−54).
JetFunction graph_theta3();
/// P₂ = −p₁² − p₁′ on graphs.
JetFunction graph_p2();
/// Calibration factor c with halphen_theta3() = c · graph_theta3().
Rational halphen_calibration();

/// Θ_{2r+2} = 2rΘ_rΘ_r″ − (2r+1)(Θ_r′)² − 3r²P₂Θ_r².
template <class T, class Derivative>
T theta_even(int r, const T& theta, const T& p2, Derivative&& d) {
  const T d1 = d(theta);
  const T d2 = d(d1);
  return T(T(JetFunction(2 * r)) * theta * d2 - T(JetFunction(2 * r + 1)) * d1 * d1 -
           T(JetFunction(3 * r * r)) * p2 * theta * theta);
}
template <class T, class Derivative>
T theta8(const T& theta3, const T& p2, Derivative&& d) {
  return theta_even(3, theta3, p2, d);
}

/// Θ₈ on graphs (involves y₁..y₇).
JetFunction graph_theta8();

/// 3⁹(1+γ²−γ)³/((γ−2)²(2γ−1)²(γ+1)²); DomainError for γ in {0, 1, −1, 2, 1/2}.
Rational curvature_closed_form(const Rational& gamma);
/// κ = Θ₈³/Θ₃⁸ at given jets (y₂..y₇); DomainError where Θ₃ = 0.
Rational curvature_at_jets(const JetPoint& jets);
/// κ of a linear order-3 equation; DomainError unless Θ₃ ≠ 0 and κ is constant.
Rational curvature_of(const LinearODE& ode);
/// κ of y = x^γ, from the jets at x = 1; DomainError for the degenerate exponents.
Rational curvature_kappa(const Rational& gamma);
/// κ of y = ln x.
Rational curvature_kappa_log();

// ---------------------------------------------------------------------------------------------
// Nonlinear equations y⁽ⁿ⁾ = F and their generalized invariants.

struct NonlinearODE {
  int order = 0;
  ExtendedJetFunction rhs;
};

NonlinearODE as_nonlinear(const LinearODE& ode);

struct CurvatureODE {
  NonlinearODE ode;
  JetFunction a;  // coefficient of y₇ in Θ₈
  JetFunction b;  // Θ₈ − a·y₇
};
/// Θ₈³ = κΘ₃⁸ solved for y₇: F = (u − B)/A with u³ = κΘ₃⁸. κ is a nonzero constant or a
/// constant expression in the symbol k.
CurvatureODE curvature_ode(const JetFunction& kappa);

/// Θ₃..Θ_n with p_r^{(k)} ↦ −C(n,r)⁻¹ D_x^k(∂F/∂y_{n−r}), D_x on the equation.
std::map<int, ExtendedJetFunction> generalized_theta(const NonlinearODE& ode);

struct Wunschmann {
  ExtendedJetFunction w1, w2;
};
/// W₁ = −3430Θ₃, W₂ = −240100(Θ₄ + (2/5)D_xΘ₃ − (12/35)∂F/∂y₆·Θ₃); order 7 only.
Wunschmann wunschmann_relations(const ExtendedJetFunction& theta3, const ExtendedJetFunction& theta4,
                                const NonlinearODE& ode);

// ---------------------------------------------------------------------------------------------
// Sampling along parametrized curves.

/// Jets x, y, y₁..y_k at t₀ of the curve (x(t), y(t)); both are functions of the variable x
/// standing for t. DomainError when ẋ(t₀) = 0.
JetPoint jets_along_curve(const JetFunction& xparam, const JetFunction& yparam, int k, const Rational& t0);

using Matrix3Q = std::array<std::array<Rational, 3>, 3>;

struct CurveSample {
  Matrix3Q transform;  // unimodular, acting on [t^p : t^q : 1]
  Rational t0;
  JetPoint jets;       // x, y, y1..y7
  Rational theta3;     // classical normalization
  Rational theta8;
};

/// Exact jets along random unimodular rational PGL(3) images of (t^p, t^q), skipping points
/// where ẋ = 0, y₂ = 0 or Θ₃ = 0. Deterministic in `seed`.
std::vector<CurveSample> projective_curve_samples(int p, int q, int count, std::uint64_t seed);

/// y⁽ⁿ⁾ = F with F given in the jet-expression grammar (k stands for κ).
NonlinearODE parse_ode(int order, std::string_view rhs);

/// Equations whose general solutions are rational curves; their invariants are expected to vanish.
struct CorpusEquation {
  std::string name;
  int order;
  std::string rhs;
};
const std::vector<CorpusEquation>& rational_curve_corpus();

/// The Halphen numerator along y = x^q, as a function of x.
JetFunction halphen_on_power(int q);

}  // namespace cuspg2::wilczynski
