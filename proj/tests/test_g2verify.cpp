#include "cuspg2/g2verify.hpp"
#include "cuspg2/liealg.hpp"
#include "cuspg2/reference.hpp"
#include "doctest.h"

using namespace cuspg2::g2verify;
using cuspg2::Rational;
using cuspg2::exterior::ExteriorForm;

TEST_CASE("co-calibration certificate") {
  const auto sc = cuspg2::liealg::extract_structure_constants(cuspg2::liealg::su21_frame());
  const auto phi = cuspg2::reference::g2_three_form();
  const auto cert = verify_cocalibrated(phi, sc);
  CHECK(cert.d_star_phi_zero);
  CHECK(cert.phi_wedge_tau_zero);
  CHECK(cert.phi_wedge_star_tau_zero);
  CHECK(cert.decomposition_exact);
  CHECK(cert.tau_nonzero);
  CHECK(cert.cocalibrated());
  CHECK(cert.lambda == Scalar::sqrt10() * Rational(3, 5));
  const Scalar r10 = Scalar::sqrt10();
  const ExteriorForm tau = ExteriorForm::monomial({1, 2, 3}, r10 * Rational(9, 20)) +
                           ExteriorForm::monomial({1, 6, 7}, r10 * Rational(9, 20)) +
                           ExteriorForm::monomial({1, 4, 5}, r10 * Rational(27, 20)) +
                           ExteriorForm::monomial({2, 5, 7}, r10 * Rational(-9, 20)) +
                           ExteriorForm::monomial({3, 5, 6}, r10 * Rational(-9, 20)) +
                           ExteriorForm::monomial({2, 4, 6}, r10 * Rational(-9, 10)) +
                           ExteriorForm::monomial({3, 4, 7}, r10 * Rational(9, 4));
  CHECK(cert.tau == tau);
  CHECK(cert.recheck(cuspg2::exterior::Differential(sc)));
  // A tampered certificate fails the recheck.
  auto bad = cert;
  bad.lambda = bad.lambda + Scalar(1);
  CHECK_FALSE(bad.recheck(cuspg2::exterior::Differential(sc)));
}

TEST_CASE("non-basic input") {
  const auto sc = cuspg2::liealg::extract_structure_constants(cuspg2::liealg::su21_frame());
  const auto cert = verify_cocalibrated(ExteriorForm::monomial({1, 2, 8}), sc);
  CHECK_FALSE(cert.phi_basic);
  CHECK_FALSE(cert.cocalibrated());
}

TEST_CASE("G2 identities") {
  const auto id = g2_identities(cuspg2::reference::g2_three_form(), 20, 7);
  CHECK(id.phi_wedge_star_phi_is_7vol);
  CHECK(id.contraction_constant == 6);
  CHECK(id.proportional_on_samples);
  CHECK(id.null_vector_annihilated);
  CHECK_FALSE(id.orientation_flipped);
  const auto flipped = g2_identities(-cuspg2::reference::g2_three_form(), 5, 7);
  CHECK(flipped.orientation_flipped);
  CHECK(flipped.phi_wedge_star_phi_is_7vol);
}
