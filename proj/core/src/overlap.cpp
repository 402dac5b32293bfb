#include "spdc/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spdc/constants.hpp"
#include "spdc/errors.hpp"
#include "spdc/quadrature.hpp"

namespace spdc {
namespace {

using cplx = std::complex<double>;

double weighted_sum(const FocusingGeometry& g) { return g.k_1 * g.xi_1 + g.k_2 * g.xi_2 + g.k_p * g.xi_p; }

double agg_numerator(const FocusingGeometry& g) {
  return g.k_1 * g.xi_1 * (g.xi_2 - g.xi_p) + g.k_2 * g.xi_2 * (g.xi_1 - g.xi_p) + g.k_p * g.xi_p * (g.xi_1 + g.xi_2);
}

// Panels such that the phase exp(-i rate x) turns by at most 4 pi per panel.
std::size_t oscillation_panels(double phase_span) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(phase_span) / (4.0 * kPi))));
}

}  // namespace

FocusingGeometry geometry_of(const BeamTriple& b) {
  return {b.pump.k(), b.signal.k(), b.idler.k(), b.xi_p, b.xi_1, b.xi_2};
}

double aggregate_focal_parameter(const FocusingGeometry& g) {
  const double den = weighted_sum(g);
  if (den == 0.0) throw DegenerateError("aggregate focal parameter: k1 xi1 + k2 xi2 + kp xip vanishes");
  return agg_numerator(g) / den;
}

double quadratic_coefficient(const FocusingGeometry& g) {
  const double num = agg_numerator(g);
  if (num == 0.0) throw DegenerateError("quadratic coefficient: aggregate focal numerator vanishes");
  return (g.k_p - g.k_1 - g.k_2) * g.xi_1 * g.xi_2 * g.xi_p * weighted_sum(g) / (num * num);
}

double normalization_coefficient(const FocusingGeometry& g, double Lz) {
  if (!(Lz > 0.0)) throw DomainError("normalization coefficient: Lz must be positive");
  const double den = weighted_sum(g);
  if (den == 0.0) throw DegenerateError("normalization coefficient: k1 xi1 + k2 xi2 + kp xip vanishes");
  return g.k_1 * g.k_2 * g.k_p * g.xi_1 * g.xi_2 * g.xi_p / (Lz * den);
}

double a_plus_b_plus(const FocusingGeometry& g) {
  if (g.k_p == 0.0 || g.xi_1 == 0.0 || g.xi_2 == 0.0 || g.xi_p == 0.0) {
    throw DegenerateError("A+B+: kp and every focal parameter must be nonzero");
  }
  return weighted_sum(g) * agg_numerator(g) / (g.k_p * g.k_p * g.xi_1 * g.xi_2 * g.xi_p);
}

double phase_mismatch_phi(double delta_omega_pump, double delta_omega_minus, double ng_p, double ng_1,
                          double ng_2, double Lz, double c, double qpm_shift) {
  const double pump_term = (ng_1 + ng_2 - 2.0 * ng_p) / (2.0 * c) * delta_omega_pump;
  const double diff_term = (ng_1 - ng_2) / (2.0 * c) * delta_omega_minus;
  return (pump_term + diff_term) * Lz + qpm_shift;
}

OverlapParams make_overlap_params(const BeamTriple& beams, double delta_k) {
  const FocusingGeometry g = geometry_of(beams);
  OverlapParams p;
  p.xi_agg = aggregate_focal_parameter(g);
  p.C_quad = quadratic_coefficient(g);
  p.D_norm = normalization_coefficient(g, beams.Lz);
  p.a_plus_b_plus = a_plus_b_plus(g);
  p.phi = delta_k * beams.Lz;
  return p;
}

cplx axial_integral(double xi, double C, double phi, double quad_tol) {
  if (!(quad_tol > 0.0)) throw DomainError("axial integral: quad_tol must be positive");
  if (!std::isfinite(xi) || !std::isfinite(C) || !std::isfinite(phi)) {
    throw SingularityError("axial integral: non-finite xi, C or phi");
  }
  // |den|^2 = (1 - a t)^2 + xi^2 t with t = l^2 in [0, 1], a = C xi^2.
  const double a = C * xi * xi;
  auto den2 = [&](double t) { return (1.0 - a * t) * (1.0 - a * t) + xi * xi * t; };
  double min_den2 = std::min(den2(0.0), den2(1.0));
  if (a != 0.0) {
    const double t_star = 1.0 / a - xi * xi / (2.0 * a * a);
    if (t_star > 0.0 && t_star < 1.0) min_den2 = std::min(min_den2, den2(t_star));
  }
  if (!(min_den2 > 1e-24)) throw SingularityError("axial integral: denominator 1 + i l xi - C xi^2 l^2 vanishes on [-1, 1]");

  auto integrand = [&](double l) {
    const cplx den{1.0 - a * l * l, l * xi};
    return std::polar(1.0, -0.5 * phi * l) / den;
  };
  const auto pts = quad::uniform_breakpoints(-1.0, 1.0, oscillation_panels(phi));
  quad::Options opt;
  opt.rel_tol = quad_tol;
  return quad::integrate(integrand, std::span<const double>(pts), opt).value;
}

cplx overlap_direct(const BeamTriple& beams, const MaterialOptics& material, double delta_k, double quad_tol) {
  if (!(quad_tol > 0.0)) throw DomainError("overlap_direct: quad_tol must be positive");
  const double Lz = material.Lz;
  const double half = 0.5 * Lz;

  std::vector<double> pts{-half};
  const auto walls = domain_walls(material.poling_period, Lz);
  if (walls.empty()) {
    const auto uniform = quad::uniform_breakpoints(-half, half, oscillation_panels(delta_k * Lz));
    pts.assign(uniform.begin(), uniform.end());
  } else {
    pts.insert(pts.end(), walls.begin(), walls.end());
    pts.push_back(half);
  }

  auto integrand = [&](double z) {
    const cplx qp = scaled_beam_parameter(beams.pump, z);
    const cplx q1 = std::conj(scaled_beam_parameter(beams.signal, z));
    const cplx q2 = std::conj(scaled_beam_parameter(beams.idler, z));
    const double sign = poling_profile(z, material.poling_period, Lz);
    return sign * std::polar(1.0, -delta_k * z) / (qp * q1 + qp * q2 + q1 * q2);
  };
  quad::Options opt;
  opt.rel_tol = quad_tol;
  opt.max_panels = std::max<std::size_t>(20000, 4 * pts.size());
  const cplx integral = quad::integrate(integrand, std::span<const double>(pts), opt).value;

  const double widths = beams.pump.w0 * beams.signal.w0 * beams.idler.w0;
  const cplx unit_chi = cplx{0.0, -1.0} * std::sqrt(8.0 / kPi) * widths * integral;
  return unit_chi * material.chi2_eff();
}

cplx overlap_simplified(const OverlapParams& params, double chi_eff, double w_p, double w_1, double w_2,
                        double Lz, double quad_tol) {
  if (!(Lz > 0.0)) throw DomainError("overlap_simplified: Lz must be positive");
  const cplx axial = axial_integral(params.xi_agg, params.C_quad, params.phi, quad_tol);
  const cplx unit_chi = cplx{0.0, -1.0} * std::sqrt(2.0 / kPi) * w_p * w_1 * w_2 * params.D_norm * axial;
  return unit_chi * chi_eff;
}

}  // namespace spdc
