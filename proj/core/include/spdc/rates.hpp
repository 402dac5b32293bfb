#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string_view>

#include "spdc/beams.hpp"
#include "spdc/constants.hpp"
#include "spdc/materials.hpp"
#include "spdc/overlap.hpp"
#include "spdc/pump.hpp"

namespace spdc {

enum class RateMethod { closed_form, brute_force };

std::string_view to_string(RateMethod method);

struct RateResult {
  double pairs_per_pump_photon = 0.0;
  double pairs_per_s_per_mW = 0.0;
  double xi_agg = 0.0;
  double a_plus_b_plus = 0.0;
  RateMethod method = RateMethod::closed_form;
  // Relative error estimate of numerical results (quadrature plus
  // frequency-window truncation).
  std::optional<double> quadrature_error_estimate;
};

/// Pump photons per second per milliwatt at the given vacuum wavelength.
double pump_photons_per_s_per_mW(double lambda_p, const PhysicalConstants& pc = kCodata);

/// Gaussian modes for the three fields using the material's phase indices.
BeamTriple make_beams(const MaterialOptics& material, double lambda_p, double lambda_1, double lambda_2,
                      double w_p, double w_1, double w_2);

/// Closed-form pair probability per pump photon for the linear
/// phase-matching model:
///   N = (64 pi^3 hbar c / eps0) ng1 ng2 ngp / (np^3 n1 n2 |ng1 - ng2|)
///       |chi_eff|^2 / (lambda1^2 lambda2^2) atan(xi) / (A+B+),
/// scaled to pairs/s/mW with P / (hbar omega_p). Throws DegenerateError
/// when ng1 == ng2.
RateResult pairs_closed_form(const MaterialOptics& material, const BeamTriple& beams,
                             const PhysicalConstants& pc = kCodata);

/// phi(d_omega_p, d_omega_minus): the first-order mismatch plus an optional
/// quadratic (GVD) term kappa0 d_omega_minus^2 Lz / 4.
struct PhaseModel {
  double pump_coeff = 0.0;  // s, (ng1 + ng2 - 2 ngp) Lz / (2c)
  double diff_coeff = 0.0;  // s, (ng1 - ng2) Lz / (2c)
  double quad_coeff = 0.0;  // s^2, kappa0 Lz / 4
  double qpm_shift = 0.0;

  double operator()(double d_omega_pump, double d_omega_minus) const;
};

PhaseModel linear_phase_model(const MaterialOptics& material, const PhysicalConstants& pc = kCodata,
                              double qpm_shift = 0.0);
PhaseModel quadratic_phase_model(const MaterialOptics& material, double kappa0,
                                 const PhysicalConstants& pc = kCodata);

/// O(omega1, omega2) in m/V.
using OverlapEvaluator = std::function<std::complex<double>(double omega1, double omega2)>;

/// Overlap from the reduced axial form with xi, C, D frozen at band centre
/// and phi taken from `phase` at the detunings of (omega1, omega2).
OverlapEvaluator make_overlap_evaluator(const MaterialOptics& material, const BeamTriple& beams,
                                        const PhaseModel& phase, double quad_tol,
                                        const PhysicalConstants& pc = kCodata);

/// Joint spectral amplitude
///   psi = sqrt(2 pi^2 hbar N_p / (eps0 lp0 l10 l20)) sqrt(ng1 ng2 ngp / (np^2 n1^2 n2^2))
///         s(omega1 + omega2) O(omega1, omega2),
/// with central vacuum wavelengths taken from `beams` and N_p from the pump
/// (1 when photons_per_pulse is unset).
std::complex<double> jsa_value(double omega1, double omega2, const PumpSpec& pump, const MaterialOptics& material,
                               const BeamTriple& beams, const OverlapEvaluator& overlap,
                               const PhysicalConstants& pc = kCodata);

/// Rate density d(pairs/s/mW)/d(delta_k) of a narrowband pump at residual
/// mismatch delta_k (after any quasi-phase matching; the poling pattern is
/// not applied): (1/2) |psi / s|^2 |O(delta_k)|^2 Lz / |(ng1 - ng2) Lz / (2c)|,
/// with O from overlap_direct. Integrates over delta_k to the total rate.
/// Throws DegenerateError when ng1 == ng2.
double pair_rate_density(const MaterialOptics& material, const BeamTriple& beams, double delta_k,
                         const PhysicalConstants& pc = kCodata, double quad_tol = 1e-9);

struct BruteForceOptions {
  double quad_tol = 1e-6;
  // Half-width of the phase-matching window in units of phi; the |O|^2 tail
  // beyond it falls off as 1/phi^2 and is reported in the error estimate.
  double phase_span = 400.0;
  // Half-width of the pump band in RMS bandwidths.
  double pump_sigmas = 6.0;
  unsigned threads = 1;
};

/// Pair probability per pump photon from the double frequency integral of
/// |psi|^2, with the overlap evaluated by axial quadrature at every point.
/// No delta-function reduction is used.
RateResult pairs_via_bruteforce(const MaterialOptics& material, const BeamTriple& beams, const PumpSpec& pump,
                                const PhysicalConstants& pc = kCodata, const BruteForceOptions& opt = {});

/// Same integral with the quadratic mismatch phi = kappa0 d_omega_minus^2 Lz / 4
/// (plus the first-order terms, which vanish for ng1 == ng2). Numerical only.
RateResult pairs_degenerate_numeric(const MaterialOptics& material, const BeamTriple& beams, const PumpSpec& pump,
                                    double kappa0, const PhysicalConstants& pc = kCodata,
                                    const BruteForceOptions& opt = {});

/// (1/epsilon) ng1 ng2 ngp / (n1^2 n2^2 np^2): ratio of this rate model to
/// Bennink's, with epsilon his QPM/loss efficiency factor.
double bennink_ratio(double n_p, double n_1, double n_2, double ng_p, double ng_1, double ng_2,
                     double epsilon_qpm = 1.0);

/// n1 n2 ngp / np^3: revised over previously published collimated rate.
double tutorial_correction_factor(double n_p, double n_1, double n_2, double ng_p);

double apply_table_correction(double rate_paper, double factor);

struct CollimatedRates {
  double r_sm = 0.0;       // pairs/s/mW, earlier single-mode formula
  double r_revised = 0.0;  // pairs/s/mW, collimated limit of the closed form
};

/// Collimated (xi -> 0) type-II rates for a pump of Gaussian RMS radius
/// sigma_p (w_p = 2 sigma_p) and collection modes with sigma = sqrt(2) sigma_p:
///   R = 1/(16 pi eps0 c^2) [index factor] d_eff^2 omega_p^2 / dng * P / sigma_p^2 * Lz
/// with index factor ng1 ng2 / (n1^2 n2^2 np) or ng1 ng2 ngp / (n1 n2 np^4).
CollimatedRates collimated_limit_rates(const MaterialOptics& material, double lambda_p, double sigma_p, double Lz,
                                       const PhysicalConstants& pc = kCodata);

}  // namespace spdc
