#include "spdc/beams.hpp"

#include <cmath>

#include "spdc/constants.hpp"
#include "spdc/errors.hpp"

namespace spdc {

double GaussianMode::k() const { return 2.0 * kPi * n / lambda_vac; }

double GaussianMode::rayleigh_range() const { return 0.5 * k() * w0 * w0; }

GaussianMode make_mode(double lambda_vac, double n, double w0, double z0) {
  if (!(lambda_vac > 0.0) || !std::isfinite(lambda_vac)) throw ValidationError("mode wavelength must be positive");
  if (!(w0 > 0.0) || !std::isfinite(w0)) throw ValidationError("mode waist must be positive");
  if (!(n >= 1.0) || !std::isfinite(n)) throw ValidationError("mode refractive index must be >= 1");
  if (!std::isfinite(z0)) throw ValidationError("mode focus position must be finite");
  return GaussianMode{lambda_vac, n, w0, z0};
}

std::complex<double> complex_beam_parameter(const GaussianMode& mode, double z) {
  return {z - mode.z0, mode.rayleigh_range()};
}

std::complex<double> scaled_beam_parameter(const GaussianMode& mode, double z) {
  return {-mode.w0 * mode.w0, 2.0 * (z - mode.z0) / mode.k()};
}

double beam_radius(const GaussianMode& mode, double z) {
  const double t = (z - mode.z0) / mode.rayleigh_range();
  return mode.w0 * std::sqrt(1.0 + t * t);
}

std::complex<double> mode_function(const GaussianMode& mode, double x, double y, double z) {
  const double k = mode.k();
  const double zr = mode.rayleigh_range();
  const std::complex<double> q = complex_beam_parameter(mode, z);
  const std::complex<double> phase{0.0, -k * (x * x + y * y) / 2.0};
  return std::sqrt(k * zr / kPi) / q * std::exp(phase / q);
}

double focal_parameter(const GaussianMode& mode, double Lz) {
  if (!(Lz >= 0.0)) throw DomainError("focal_parameter: crystal length must be non-negative");
  return Lz / (mode.k() * mode.w0 * mode.w0);
}

GaussianMode with_focal_parameter(const GaussianMode& mode, double xi, double Lz) {
  if (!(xi > 0.0) || !(Lz > 0.0)) throw DomainError("with_focal_parameter: xi and Lz must be positive");
  GaussianMode out = mode;
  out.w0 = std::sqrt(Lz / (mode.k() * xi));
  return out;
}

BeamTriple make_beam_triple(const GaussianMode& pump, const GaussianMode& signal,
                            const GaussianMode& idler, double Lz) {
  if (!(Lz > 0.0)) throw ValidationError("crystal length must be positive");
  BeamTriple b{pump, signal, idler, Lz, 0.0, 0.0, 0.0};
  b.xi_p = focal_parameter(pump, Lz);
  b.xi_1 = focal_parameter(signal, Lz);
  b.xi_2 = focal_parameter(idler, Lz);
  return b;
}

}  // namespace spdc
