#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspg2/binform.hpp"
#include "cuspg2/exterior.hpp"
#include "cuspg2/liealg.hpp"
#include "cuspg2/scalar.hpp"

namespace cuspg2::orbit {

using Scalar = AlgebraicScalar;

/// Independent Maurer–Cartan symbols; σ³₃ = −σ¹₁ − σ²₂ is eliminated eagerly.
enum Sigma : int { s11 = 0, s12, s13, s21, s22, s23, s31, s32 };
inline constexpr int kSigmaCount = 8;
extern const std::array<std::string, kSigmaCount> kSigmaNames;

/// Linear combination of the independent σ symbols.
class SigmaLinear {
 public:
  SigmaLinear() = default;
  /// The symbol σ^a_b for a, b in 1..3 (σ³₃ expands through the trace relation).
  static SigmaLinear symbol(int a, int b);

  const Scalar& operator[](int k) const { return c_[k]; }
  Scalar& operator[](int k) { return c_[k]; }
  bool is_zero() const;

  SigmaLinear& operator+=(const SigmaLinear& o);
  SigmaLinear& operator-=(const SigmaLinear& o);
  friend SigmaLinear operator+(SigmaLinear a, const SigmaLinear& b) { return a += b; }
  friend SigmaLinear operator-(SigmaLinear a, const SigmaLinear& b) { return a -= b; }
  friend SigmaLinear operator-(const SigmaLinear& a) { return SigmaLinear() - a; }
  friend SigmaLinear operator*(const SigmaLinear& a, const Scalar& c);
  friend SigmaLinear operator*(const Scalar& c, const SigmaLinear& a) { return a * c; }
  friend bool operator==(const SigmaLinear& a, const SigmaLinear& b) { return a.c_ == b.c_; }

  /// The same combination as a one-form in the exterior algebra on the σ generators.
  exterior::ExteriorForm as_form() const;
  std::string to_string() const;

 private:
  std::array<Scalar, kSigmaCount> c_{};
};

using CoframeSextic = binform::BinaryForm<SigmaLinear>;

struct FamilySextic {
  CoframeSextic form;        // degree 2q in (s,t)
  int pulled_out_power = 0;  // exponent of the t-power removed before homogenizing
};

/// Normal-bundle polynomial of the curve y^p = x^q (coprime 0 < p < q) under the
/// Maurer–Cartan form. Throws DomainError for invalid (p,q).
FamilySextic family_sextic(int p, int q);

/// Symmetric bilinear form on the σ generators: value(u, v) = uᵀ G v.
using Gram = std::array<std::array<Scalar, kSigmaCount>, kSigmaCount>;

/// Symmetrized product a ⊙ b as a Gram matrix.
Gram symmetric_product(const SigmaLinear& a, const SigmaLinear& b);
Gram operator+(const Gram& a, const Gram& b);
Gram scale(const Gram& a, const Scalar& c);

/// g = a⁰⊙a⁶ − 6a¹⊙a⁵ + 15a²⊙a⁴ − 10(a³)², for a sextic S.
Gram metric_from_sextic(const CoframeSextic& sextic);

/// φ = √(5/2)(3(a¹∧a²∧a⁶ + a⁰∧a⁴∧a⁵) + a³∧(a⁰∧a⁶ + 6a¹∧a⁵ − 15a²∧a⁴)), over the σ generators.
exterior::ExteriorForm threeform_from_sextic(const CoframeSextic& sextic);

/// The σ symbols as one-forms in θ¹..θ⁸ (built from the su(2,1) frame).
using SigmaDictionary = std::array<exterior::ExteriorForm, kSigmaCount>;
SigmaDictionary su21_dictionary(const liealg::FrameBasis& basis);

/// Gram matrix in θ¹..θ⁸ (8×8). Throws DomainError if the result is not real.
std::array<std::array<Scalar, 8>, 8> realize_metric(const Gram& g, const SigmaDictionary& dict);
/// Three-form in θ¹..θ⁸. Throws DomainError if the result is not real.
exterior::ExteriorForm realize_form(const exterior::ExteriorForm& phi_sigma, const SigmaDictionary& dict);

enum class RealForm { kSplit, kSu3, kSu21 };
std::optional<RealForm> parse_real_form(std::string_view tag);
std::string to_string(RealForm form);

/// Linear map from the seven real coordinates of the given real form to the σ symbols,
/// rows indexed by Sigma, columns by coordinate.
std::array<std::array<Scalar, 7>, kSigmaCount> real_coordinates(RealForm form);

/// (n₊, n₋) of a real symmetric matrix with rational entries, by exact congruence.
/// Throws DomainError for degenerate or non-rational input.
std::pair<int, int> signature(std::vector<std::vector<Rational>> m);

/// Signature of the (2,3) family metric restricted to the real form.
std::pair<int, int> metric_signature(RealForm form);
/// Signature of the metric induced by the three-form itself: the symmetric form
/// B(V,W)·vol = (V⌟φ)∧(W⌟φ)∧φ scaled by sign(det B), the sign of det(B)^{1/9}.
std::pair<int, int> phi_metric_signature(RealForm form);

/// Whether diag(a^{w₁}, a^{w₂}, a^{w₃}) maps Y^pZ^{q−p} = X^q to itself for a formal unit a.
bool stabilizer_check(int p, int q, const std::array<int, 3>& weights);
/// Weights (q−2p, p−2q, p+q) of the one-parameter stabilizer.
std::array<int, 3> stabilizer_weights(int p, int q);

/// (k,l) with p = (2l+k)/3 and q = −(l+2k)/3.
std::pair<long, long> aloff_wallach_indices(long p, long q);
/// Inverse relation; nothing when p or q would not be an integer.
std::optional<std::pair<long, long>> curve_exponents(long k, long l);

struct LiftData {
  std::array<Rational, 3> value_at_zero;     // γ(0)
  std::array<Rational, 3> velocity_at_zero;  // γ̇(0)
  bool smooth = false;
};
/// Evaluates the lift γ(t) = (t^p, t^q, (q/p)t^{q−p}) and its velocity at t = 0.
LiftData legendrian_lift(int p, int q);
bool legendrian_lift_smooth(int p, int q);

}  // namespace cuspg2::orbit
