#pragma once

#include <optional>
#include <string_view>

#include "spdc/constants.hpp"

namespace spdc {

enum class SpectralShape { gaussian };

SpectralShape parse_spectral_shape(std::string_view tag);

/// Pump field: power, centre wavelength and a normalized spectral amplitude
/// s(omega) with int |s|^2 d omega = 1. For the Gaussian shape `bandwidth`
/// is the RMS width (rad/s) of |s|^2.
struct PumpSpec {
  double power = 0.0;           // W
  double central_lambda = 0.0;  // m, vacuum
  SpectralShape shape = SpectralShape::gaussian;
  double bandwidth = 0.0;                   // rad/s
  std::optional<double> photons_per_pulse;  // N_p; none for CW

  double central_omega(const PhysicalConstants& pc = kCodata) const;

  /// s at detuning d_omega = omega - omega_p0 (units 1/sqrt(rad/s)).
  double amplitude(double d_omega) const;

  /// Pump photons per second, P / (hbar omega_p0).
  double photon_rate(const PhysicalConstants& pc = kCodata) const;
};

/// Validates positivity and checks the spectral normalization numerically
/// (|1 - int |s|^2| <= 1e-9); throws ValidationError otherwise.
PumpSpec make_pump_spec(double power, double central_lambda, double bandwidth,
                        SpectralShape shape = SpectralShape::gaussian,
                        std::optional<double> photons_per_pulse = std::nullopt);

/// int |s|^2 d omega by adaptive quadrature over +/- 12 bandwidths.
double spectral_norm(const PumpSpec& pump);

}  // namespace spdc
