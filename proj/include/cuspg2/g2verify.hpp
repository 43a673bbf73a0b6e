#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspg2/exterior.hpp"

namespace cuspg2::g2verify {

using exterior::ExteriorForm;
using exterior::Orientation;
using exterior::Scalar;

/// Self-verifying record of dφ = λ*φ + *τ, d*φ = 0 for a left-invariant three-form.
struct G2Certificate {
  ExteriorForm phi{3};
  ExteriorForm star_phi{4};
  ExteriorForm d_phi{4};
  ExteriorForm d_star_phi{5};
  Scalar lambda;
  ExteriorForm tau{3};
  Orientation orientation = Orientation::kPositive;

  bool phi_basic = false;
  bool d_phi_basic = false;
  bool d_star_phi_basic = false;
  bool d_star_phi_zero = false;
  bool decomposition_exact = false;  // dφ − λ*φ − *τ = 0
  bool phi_wedge_tau_zero = false;
  bool phi_wedge_star_tau_zero = false;
  bool tau_nonzero = false;

  /// Residuals kept for failing checks (zero forms when everything holds).
  ExteriorForm phi_wedge_tau{6};
  ExteriorForm phi_wedge_star_tau{7};

  /// All identities hold (τ ≠ 0 is recorded separately; it is not required).
  bool cocalibrated() const;
  /// Recomputes every flag from the stored forms and the differential.
  bool recheck(const exterior::Differential& d) const;
};

G2Certificate verify_cocalibrated(const ExteriorForm& phi, const exterior::StructureConstants& sc,
                                  Orientation orientation = Orientation::kPositive);

struct G2Identities {
  bool phi_wedge_star_phi_is_7vol = false;
  /// c in (V⌟φ)∧(V⌟φ)∧φ = c·g(V,V)·vol, from V = e₁.
  Scalar contraction_constant;
  bool proportional_on_samples = false;
  int samples = 0;
  bool null_vector_annihilated = false;
  /// Orientation for which c > 0; flipped from the default when the sign test fails.
  Orientation orientation = Orientation::kPositive;
  bool orientation_flipped = false;
};

/// Checks φ∧*φ = 7 vol and the contraction proportionality on `samples` random rational
/// vectors drawn with `seed`.
G2Identities g2_identities(const ExteriorForm& phi, int samples = 20, std::uint64_t seed = 1);

}  // namespace cuspg2::g2verify
