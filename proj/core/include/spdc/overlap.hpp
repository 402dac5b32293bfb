#pragma once

#include <complex>

#include "spdc/beams.hpp"
#include "spdc/materials.hpp"

namespace spdc {

// Wavenumbers (1/m) and focal parameters of the pump, signal and idler modes.
struct FocusingGeometry {
  double k_p = 0.0;
  double k_1 = 0.0;
  double k_2 = 0.0;
  double xi_p = 0.0;
  double xi_1 = 0.0;
  double xi_2 = 0.0;
};

FocusingGeometry geometry_of(const BeamTriple& beams);

struct OverlapParams {
  double xi_agg = 0.0;         // aggregate focal parameter
  double C_quad = 0.0;         // wavefront-curvature coefficient
  double D_norm = 0.0;         // 1/m^3
  double a_plus_b_plus = 0.0;  // A+B+
  double phi = 0.0;            // delta_k * Lz
};

// Aggregate focal parameter
//   xi = [k1 xi1 (xi2 - xip) + k2 xi2 (xi1 - xip) + kp xip (xi1 + xi2)] / (k1 xi1 + k2 xi2 + kp xip).
// Throws DegenerateError when the denominator vanishes.
double aggregate_focal_parameter(const FocusingGeometry& g);

// C = (kp - k1 - k2) xi1 xi2 xip (k1 xi1 + k2 xi2 + kp xip) / [xi numerator]^2.
// Exactly zero when kp == k1 + k2.
double quadratic_coefficient(const FocusingGeometry& g);

// D = k1 k2 kp xi1 xi2 xip / (Lz (k1 xi1 + k2 xi2 + kp xip)).
double normalization_coefficient(const FocusingGeometry& g, double Lz);

// A+B+ = (k1 xi1 + k2 xi2 + kp xip) [xi numerator] / (kp^2 xi1 xi2 xip).
// Scale invariant in the xi_j; equals 4 for equal xi_j and kp = k1 + k2.
double a_plus_b_plus(const FocusingGeometry& g);

/// First-order phase mismatch phi = delta_k * Lz at detunings
/// delta_omega_pump = (w1 - w10) + (w2 - w20) and
/// delta_omega_minus = (w1 - w10) - (w2 - w20):
///   phi = [(ng1 + ng2 - 2 ngp)/(2c) d_wp + (ng1 - ng2)/(2c) d_wm] Lz + qpm_shift.
double phase_mismatch_phi(double delta_omega_pump, double delta_omega_minus, double ng_p, double ng_1,
                          double ng_2, double Lz, double c, double qpm_shift = 0.0);

/// xi_agg, C, D, A+B+ for the triple and phi = delta_k * Lz.
OverlapParams make_overlap_params(const BeamTriple& beams, double delta_k);

/// Axial integral in the scaled coordinate l = 2z/Lz,
///   I = int_{-1}^{1} exp(-i phi l / 2) / (1 + i l xi - C xi^2 l^2) dl,
/// to relative tolerance quad_tol. SingularityError if the denominator
/// (nearly) vanishes on [-1, 1].
std::complex<double> axial_integral(double xi, double C, double phi, double quad_tol);

/// Spatial overlap integral evaluated directly in z over the crystal,
///   O = -i chi(z) sqrt(8/pi) w_p w_1 w_2 int dz exp(-i dk z) / (qp q1* + qp q2* + q1* q2*),
/// with q the scaled beam parameters and chi(z) = chi_eff * poling_profile(z).
/// Each poled domain is a separate quadrature panel. Units: m/V.
std::complex<double> overlap_direct(const BeamTriple& beams, const MaterialOptics& material, double delta_k,
                                    double quad_tol = 1e-9);

/// Same integral via the reduced form
///   O = -i chi_eff sqrt(2/pi) w_p w_1 w_2 D axial_integral(xi, C, phi).
/// Assumes an unpoled crystal with all foci at its centre.
std::complex<double> overlap_simplified(const OverlapParams& params, double chi_eff, double w_p, double w_1,
                                        double w_2, double Lz, double quad_tol = 1e-9);

}  // namespace spdc
