#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "cuspg2/scalar.hpp"

namespace cuspg2::exterior {

using Scalar = AlgebraicScalar;

/// Number of coframe generators θ¹..θ⁸.
inline constexpr int kGenerators = 8;
/// Subset of {1..8} encoded as a bitmask; bit k−1 stands for θᵏ.
using Mask = std::uint8_t;

inline constexpr Mask kVolume7 = 0x7F;  // θ¹∧…∧θ⁷

/// Graded element of the exterior algebra on eight generators.
///
/// A form has a fixed degree even when zero, so that degree mismatches are caught. The
/// generators are θ¹..θ⁸ by default; module orbit reuses the same type with the eight
/// independent Maurer–Cartan symbols as generators.
class ExteriorForm {
 public:
  explicit ExteriorForm(int degree = 0);

  static ExteriorForm constant(const Scalar& c);
  /// c·θᵏ, k in 1..8.
  static ExteriorForm theta(int k, const Scalar& c = 1);
  /// c·θ^{i₁}∧…∧θ^{i_m}; the indices may come in any order (the sign follows).
  static ExteriorForm monomial(std::initializer_list<int> indices, const Scalar& c = 1);
  static ExteriorForm from_mask(Mask mask, const Scalar& c = 1);

  int degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  Scalar coefficient(Mask mask) const;
  bool is_zero() const { return terms_.empty(); }
  /// No term involves θ⁸.
  bool is_basic() const;
  bool is_real() const;

  ExteriorForm operator-() const;
  ExteriorForm& operator+=(const ExteriorForm& other);
  ExteriorForm& operator-=(const ExteriorForm& other);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(const Scalar& c, const ExteriorForm& a);
  friend ExteriorForm operator*(const ExteriorForm& a, const Scalar& c) { return c * a; }
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// e.g. "(1)*th123 + (-1)*th257"; generator labels are 1-based digits. `names`, when given,
  /// replaces "th<digits>" by the wedge of the named generators.
  std::string to_string(const std::array<std::string, kGenerators>* names = nullptr) const;

 private:
  void add_term(Mask mask, const Scalar& c);

  int degree_;
  std::map<Mask, Scalar> terms_;
};

/// Index list of a mask in increasing order (1-based).
std::vector<int> indices(Mask mask);
/// Sign of θ^A ∧ θ^B → θ^{A∪B}; zero when A and B overlap.
int wedge_sign(Mask a, Mask b);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm wedge(std::initializer_list<ExteriorForm> factors);

/// Table c_{jk}^l of [e_j, e_k] = Σ_l c_{jk}^l e_l (1-based indices).
class StructureConstants {
 public:
  StructureConstants();

  const Scalar& operator()(int j, int k, int l) const { return c_[j - 1][k - 1][l - 1]; }
  /// Sets c_{jk}^l and c_{kj}^l = −c_{jk}^l together.
  void set(int j, int k, int l, const Scalar& value);

  bool is_antisymmetric() const;
  /// Jacobi identity on every triple of basis elements.
  bool satisfies_jacobi() const;

  /// dθˡ = −Σ_{j<k} c_{jk}^l θʲ∧θᵏ.
  ExteriorForm dtheta(int l) const;

 private:
  std::array<std::array<std::array<Scalar, kGenerators>, kGenerators>, kGenerators> c_{};
};

/// Exterior derivative of a left-invariant form (constant coefficients), extended as an
/// antiderivation from dθˡ.
class Differential {
 public:
  explicit Differential(const StructureConstants& sc);
  ExteriorForm operator()(const ExteriorForm& a) const;
  const ExteriorForm& of_monomial(Mask mask) const { return monomial_d_[mask]; }

 private:
  std::array<ExteriorForm, 256> monomial_d_;
};

/// Orientation of the 7-dimensional quotient: vol = orientation · θ¹∧…∧θ⁷.
enum class Orientation { kPositive = 1, kNegative = -1 };

/// Hodge star for the metric Σ (θⁱ)² on θ¹..θ⁷. Throws DomainError for non-basic input.
ExteriorForm hodge_star(const ExteriorForm& a, Orientation orientation = Orientation::kPositive);
ExteriorForm volume_form(Orientation orientation = Orientation::kPositive);

/// ⟨α,β⟩ with α∧*β = ⟨α,β⟩ vol (bilinear, not Hermitian).
Scalar inner_product(const ExteriorForm& a, const ExteriorForm& b);

/// Interior product V⌟α for V = Σ vᵏ eₖ in the frame dual to θ¹..θ⁸.
ExteriorForm interior(const std::array<Scalar, kGenerators>& v, const ExteriorForm& a);

/// Pullback along the linear map sending generator k to the one-form images[k−1].
ExteriorForm pullback(const ExteriorForm& a, const std::array<ExteriorForm, kGenerators>& images);

}  // namespace cuspg2::exterior
