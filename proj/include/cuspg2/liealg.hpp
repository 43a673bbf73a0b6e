#pragma once

#include <array>
#include <string>

#include "cuspg2/exterior.hpp"
#include "cuspg2/scalar.hpp"

namespace cuspg2::liealg {

using Scalar = AlgebraicScalar;

class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(const std::array<std::array<Scalar, 3>, 3>& entries) : m_(entries) {}

  static Matrix3 identity();
  static Matrix3 diagonal(const Scalar& a, const Scalar& b, const Scalar& c);

  Scalar& operator()(int r, int c) { return m_[r][c]; }
  const Scalar& operator()(int r, int c) const { return m_[r][c]; }

  Scalar trace() const;
  Matrix3 conjugate_transpose() const;
  bool is_zero() const;

  friend Matrix3 operator+(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator-(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(const Scalar& c, const Matrix3& a);
  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.m_ == b.m_; }

  /// Rows separated by "; " and entries by ", ", each entry in scalar text form, wrapped in [].
  std::string to_string() const;
  /// Inverse of to_string (accepts the same grammar).
  static Matrix3 parse(std::string_view text);

 private:
  std::array<std::array<Scalar, 3>, 3> m_{};
};

Matrix3 commutator(const Matrix3& x, const Matrix3& y);

/// Ordered basis e₁..e₈.
using FrameBasis = std::array<Matrix3, 8>;

/// The basis of su(2,1) adapted to the U(1) stabilizer, e₈ = diag(i, 4i, −5i).
FrameBasis su21_frame();

/// Solves [e_j, e_k] = Σ c_{jk}^l e_l exactly. Throws DomainError when the basis is linearly
/// dependent or a commutator leaves the span (closure failure).
exterior::StructureConstants extract_structure_constants(const FrameBasis& basis);

/// σ = Σ eₖ ⊗ θᵏ entrywise: sigma[a][b] is the one-form σ^{a+1}_{b+1}.
using SigmaMatrix = std::array<std::array<exterior::ExteriorForm, 3>, 3>;
SigmaMatrix sigma_in_theta(const FrameBasis& basis);

/// Hermitian η (normalized so its first nonzero entry is 1) with X†η + ηX = 0 for every basis
/// element; throws DomainError when no unique such form exists.
Matrix3 hermitian_form(const FrameBasis& basis);

bool is_traceless(const Matrix3& x);
bool preserves_form(const Matrix3& x, const Matrix3& eta);

}  // namespace cuspg2::liealg
