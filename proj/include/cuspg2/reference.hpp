#pragma once

#include <array>

#include "cuspg2/exterior.hpp"
#include "cuspg2/orbit.hpp"

// Closed-form target values that the pipelines are checked against.
namespace cuspg2::reference {

/// dθ¹..dθ⁸ of the su(2,1) coframe, as displayed in the literature.
std::array<exterior::ExteriorForm, 8> structure_equations();

/// φ = θ¹²³ + θ¹⁴⁵ + θ¹⁶⁷ + θ²⁴⁶ − θ²⁵⁷ − θ³⁴⁷ − θ³⁵⁶.
exterior::ExteriorForm g2_three_form();
/// Normal sextic of the cuspidal cubic family (t³ pulled out), σ³₃ kept symbolic through the trace.
orbit::CoframeSextic cubic_sextic();
/// 2σ³₂σ²₃ + ½σ³₁σ¹₃ − (2/5)σ¹₂σ²₁ − (1/40)(4σ¹₁ − σ²₂)², as a Gram matrix.
orbit::Gram cubic_family_metric();

}  // namespace cuspg2::reference
