#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspg2/orbit.hpp"
#include "cuspg2/report.hpp"
#include "cuspg2/wilczynski.hpp"

// Verification suites: the acceptance criteria and the per-command report builders.
namespace cuspg2::suite {

using report::InvariantReport;
using Reports = std::vector<InvariantReport>;

struct Options {
  int samples = 50;          // sampling-oracle points (criterion 10, `ode sample`)
  std::uint64_t seed = 42;   // only selects sample points; verdicts are exact
};

inline constexpr int kCriteria = 12;

struct Criterion {
  int id = 0;
  std::string title;
  Reports checks;
  /// No check failed (recorded values do not count against a criterion).
  bool passed() const { return !report::any_failed(checks); }
};

std::string criterion_title(int id);
/// Runs one criterion (1..12); DomainError for an unknown id.
Criterion run_criterion(int id, const Options& options = {});
/// All criteria, evaluated concurrently and returned in id order.
std::vector<Criterion> run_acceptance(const Options& options = {});

/// su21: structure equations, realization and co-calibration certificate, identities and
/// signature; split and su3: signature checks only.
Reports g2_report(orbit::RealForm form);

/// κ of y = x^γ (exact, checked against the closed form) or of y = ln x when `gamma` is "ln".
Reports curvature_report(const std::string& gamma);
/// Generalized Θ₃..Θ_n of y⁽ⁿ⁾ = F, one recorded value per r.
Reports generalized_report(const wilczynski::NonlinearODE& ode);
/// Θ₃..Θ₇ of the curvature equation for a constant κ (a rational or the symbol k).
Reports generalized_kappa_report(const std::string& kappa);
/// Membership oracle: exact jets of PGL(3) images of (t^p, t^q) against κ(q/p).
Reports sample_report(int p, int q, const Options& options);

/// Family sextic, stabilizer, Aloff–Wallach indices and Legendrian-lift verdict.
Reports orbit_report(int p, int q);

/// I₂ of a sextic.
Reports forms_i2_report(const std::string& v);
/// I₃(U, V, W) of three sextics.
Reports forms_i3_report(const std::string& u, const std::string& v, const std::string& w);
/// ⟨U, V⟩_p, printed or calibrated normalization.
Reports forms_transvectant_report(const std::string& u, const std::string& v, int p, bool calibrated);

}  // namespace cuspg2::suite
