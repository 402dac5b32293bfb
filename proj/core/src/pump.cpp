#include "spdc/pump.hpp"

#include <cmath>
#include <string>

#include "spdc/errors.hpp"
#include "spdc/quadrature.hpp"

namespace spdc {

SpectralShape parse_spectral_shape(std::string_view tag) {
  if (tag == "gaussian") return SpectralShape::gaussian;
  throw ValidationError("unknown pump spectral shape '" + std::string(tag) + "' (expected gaussian)");
}

double PumpSpec::central_omega(const PhysicalConstants& pc) const { return angular_frequency(central_lambda, pc); }

double PumpSpec::amplitude(double d_omega) const {
  const double sigma = bandwidth;
  return std::pow(2.0 * kPi * sigma * sigma, -0.25) * std::exp(-d_omega * d_omega / (4.0 * sigma * sigma));
}

double PumpSpec::photon_rate(const PhysicalConstants& pc) const { return power / (pc.hbar * central_omega(pc)); }

double spectral_norm(const PumpSpec& pump) {
  const double span = 12.0 * pump.bandwidth;
  auto density = [&](double d) {
    const double s = pump.amplitude(d);
    return s * s;
  };
  quad::Options opt;
  opt.rel_tol = 1e-12;
  return quad::integrate(density, -span, span, opt).value;
}

PumpSpec make_pump_spec(double power, double central_lambda, double bandwidth, SpectralShape shape,
                        std::optional<double> photons_per_pulse) {
  if (!(power > 0.0) || !std::isfinite(power)) throw ValidationError("pump power must be positive");
  if (!(central_lambda > 0.0)) throw ValidationError("pump wavelength must be positive");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) throw ValidationError("pump bandwidth must be positive and finite");
  if (photons_per_pulse && !(*photons_per_pulse > 0.0)) throw ValidationError("photons per pulse must be positive");
  PumpSpec p{power, central_lambda, shape, bandwidth, photons_per_pulse};
  const double norm = spectral_norm(p);
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw ValidationError("pump spectral amplitude is not normalized (integral " + std::to_string(norm) + ")");
  }
  return p;
}

}  // namespace spdc
