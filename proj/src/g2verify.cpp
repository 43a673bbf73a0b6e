#include "cuspg2/g2verify.hpp"

#include <random>

#include "cuspg2/errors.hpp"

namespace cuspg2::g2verify {

using exterior::hodge_star;
using exterior::wedge;

bool G2Certificate::cocalibrated() const {
  return phi_basic && d_phi_basic && d_star_phi_basic && d_star_phi_zero && decomposition_exact &&
         phi_wedge_tau_zero && phi_wedge_star_tau_zero;
}

bool G2Certificate::recheck(const exterior::Differential& d) const {
  if (!phi.is_basic()) return false;
  if (!(hodge_star(phi, orientation) == star_phi)) return false;
  if (!(d(phi) == d_phi) || !(d(star_phi) == d_star_phi)) return false;
  if (!d_phi.is_basic() || !d_star_phi.is_zero()) return false;
  const auto star_tau = hodge_star(tau, orientation);
  if (!(d_phi - lambda * star_phi - star_tau).is_zero()) return false;
  return wedge(phi, tau).is_zero() && wedge(phi, star_tau).is_zero();
}

G2Certificate verify_cocalibrated(const ExteriorForm& phi, const exterior::StructureConstants& sc,
                                  Orientation orientation) {
  if (phi.degree() != 3) throw DomainError("co-calibration check needs a three-form");
  const exterior::Differential d(sc);
  G2Certificate c;
  c.orientation = orientation;
  c.phi = phi;
  c.phi_basic = phi.is_basic();
  if (!c.phi_basic) return c;
  c.star_phi = hodge_star(phi, orientation);
  c.d_phi = d(phi);
  c.d_star_phi = d(c.star_phi);
  c.d_phi_basic = c.d_phi.is_basic();
  c.d_star_phi_basic = c.d_star_phi.is_basic();
  c.d_star_phi_zero = c.d_star_phi.is_zero();
  if (!c.d_phi_basic) return c;
  // Orthogonal projection of dφ onto *φ.
  c.lambda = exterior::inner_product(c.d_phi, c.star_phi) / exterior::inner_product(c.star_phi, c.star_phi);
  c.tau = hodge_star(c.d_phi, orientation) - c.lambda * phi;
  const auto star_tau = hodge_star(c.tau, orientation);
  c.decomposition_exact = (c.d_phi - c.lambda * c.star_phi - star_tau).is_zero();
  c.phi_wedge_tau = wedge(phi, c.tau);
  c.phi_wedge_star_tau = wedge(phi, star_tau);
  c.phi_wedge_tau_zero = c.phi_wedge_tau.is_zero();
  c.phi_wedge_star_tau_zero = c.phi_wedge_star_tau.is_zero();
  c.tau_nonzero = !c.tau.is_zero();
  return c;
}

namespace {

// Coefficient of θ¹∧…∧θ⁷ in (V⌟φ)∧(V⌟φ)∧φ.
Scalar contraction(const ExteriorForm& phi, const std::array<Scalar, 8>& v) {
  const auto vphi = exterior::interior(v, phi);
  return wedge({vphi, vphi, phi}).coefficient(exterior::kVolume7);
}

Scalar metric_norm(const std::array<Scalar, 8>& v) {
  Scalar s;
  for (int k = 0; k < 7; ++k) s += v[k] * v[k];
  return s;
}

}  // namespace

G2Identities g2_identities(const ExteriorForm& phi, int samples, std::uint64_t seed) {
  G2Identities r;
  r.samples = samples;
  std::array<Scalar, 8> e1{};
  e1[0] = 1;
  r.contraction_constant = contraction(phi, e1);
  const auto c = r.contraction_constant.as_rational();
  if (c && *c < 0) {
    r.orientation = Orientation::kNegative;
    r.orientation_flipped = true;
  }
  const auto vol = exterior::volume_form(r.orientation);
  r.phi_wedge_star_phi_is_7vol = wedge(phi, hodge_star(phi, r.orientation)) == Scalar(7) * vol;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  r.proportional_on_samples = !r.contraction_constant.is_zero();
  for (int trial = 0; trial < samples; ++trial) {
    std::array<Scalar, 8> v{};
    for (auto& x : v) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      x = q;
    }
    if (!(contraction(phi, v) == r.contraction_constant * metric_norm(v))) r.proportional_on_samples = false;
  }
  // V = e₁ + i e₂ is null for the complexified metric.
  std::array<Scalar, 8> null{};
  null[0] = 1;
  null[1] = Scalar::i();
  r.null_vector_annihilated = metric_norm(null).is_zero() && contraction(phi, null).is_zero();
  return r;
}

}  // namespace cuspg2::g2verify
