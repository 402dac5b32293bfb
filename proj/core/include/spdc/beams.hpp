#pragma once

#include <complex>

namespace spdc {

/// Fundamental Gaussian mode inside a medium of index n. The focus sits at
/// z0 measured from the crystal centre.
struct GaussianMode {
  double lambda_vac = 0.0;  // m
  double n = 1.0;
  double w0 = 0.0;  // m, 1/e^2 intensity radius at the focus
  double z0 = 0.0;  // m

  double k() const;               // 2 pi n / lambda_vac
  double rayleigh_range() const;  // k w0^2 / 2
};

/// Throws ValidationError unless lambda_vac > 0, w0 > 0 and n >= 1.
GaussianMode make_mode(double lambda_vac, double n, double w0, double z0 = 0.0);

// q = (z - z0) + i z_R
std::complex<double> complex_beam_parameter(const GaussianMode& mode, double z);

/// q_bar = (2i/k) q = -w0^2 + (2i/k)(z - z0).
std::complex<double> scaled_beam_parameter(const GaussianMode& mode, double z);

/// 1/e^2 radius w(z).
double beam_radius(const GaussianMode& mode, double z);

/// Transverse mode g(x, y) at axial position z, normalized so that
/// the integral of |g|^2 over the plane is 1:
///   g = sqrt(k z_R / pi) / q * exp(-i k (x^2 + y^2) / (2 q)).
std::complex<double> mode_function(const GaussianMode& mode, double x, double y, double z);

/// xi = Lz / (k w0^2) = Lz / (2 z_R).
double focal_parameter(const GaussianMode& mode, double Lz);

/// Copy of `mode` with the waist chosen so that focal_parameter == xi.
GaussianMode with_focal_parameter(const GaussianMode& mode, double xi, double Lz);

struct BeamTriple {
  GaussianMode pump;
  GaussianMode signal;
  GaussianMode idler;
  double Lz = 0.0;
  double xi_p = 0.0;
  double xi_1 = 0.0;
  double xi_2 = 0.0;
};

BeamTriple make_beam_triple(const GaussianMode& pump, const GaussianMode& signal,
                            const GaussianMode& idler, double Lz);

}  // namespace spdc
