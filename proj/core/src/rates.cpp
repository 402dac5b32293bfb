#include "spdc/rates.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "spdc/errors.hpp"
#include "spdc/quadrature.hpp"

namespace spdc {
namespace {

using cplx = std::complex<double>;

constexpr double kPerMilliwatt = 1e-3;

void require_nondegenerate(const MaterialOptics& m, const char* who) {
  if (m.ng_1 == m.ng_2) {
    throw DegenerateError(std::string(who) +
                          ": ng_1 == ng_2, so the linear phase-matching model has no closed form; "
                          "use pairs_degenerate_numeric (CLI: --degenerate --kappa0)");
  }
}

// |psi|^2 / (|s|^2 |O|^2): the squared JSA prefactor for N_p pump photons.
double jsa_prefactor_sq(const MaterialOptics& m, const BeamTriple& beams, double photons,
                        const PhysicalConstants& pc) {
  const double lambdas = beams.pump.lambda_vac * beams.signal.lambda_vac * beams.idler.lambda_vac;
  const double indices = m.ng_1 * m.ng_2 * m.ng_p / (m.n_p * m.n_p * m.n_1 * m.n_1 * m.n_2 * m.n_2);
  return 2.0 * kPi * kPi * pc.hbar * photons / (pc.epsilon0 * lambdas) * indices;
}

// Contiguous detuning ranges where |phi| <= span, each split at every 2 pi
// of phase so that one quadrature panel sees at most one oscillation of
// the phase-matching function.
struct PhaseWindow {
  std::vector<std::vector<double>> segments;
  std::vector<std::pair<double, double>> gaps;  // bounded ranges with |phi| > span between segments
};

std::vector<double> level_crossings(double q, double b, double c0, double level) {
  const double c = c0 - level;
  if (q == 0.0) return {-c / b};
  const double disc = b * b - 4.0 * q * c;
  if (disc < 0.0) return {};
  const double root = std::sqrt(disc);
  const double t = -0.5 * (b + std::copysign(root, b == 0.0 ? 1.0 : b));
  if (t == 0.0) return {0.0};
  return {t / q, c / t};
}

PhaseWindow phase_window(const PhaseModel& phase, double d_omega_pump, double span) {
  const double q = phase.quad_coeff;
  const double b = phase.diff_coeff;
  if (q == 0.0 && b == 0.0) {
    throw DegenerateError("phase mismatch does not depend on the signal-idler detuning; "
                          "the frequency integral diverges (supply a quadratic dispersion term)");
  }
  const double c0 = phase.pump_coeff * d_omega_pump + phase.qpm_shift;

  std::vector<double> levels{-span, span};
  const auto m_max = static_cast<long long>(std::floor(span / (2.0 * kPi)));
  for (long long m = -m_max; m <= m_max; ++m) {
    const double level = 2.0 * kPi * static_cast<double>(m);
    if (std::abs(level) < span) levels.push_back(level);
  }
  std::vector<double> roots;
  for (double level : levels) {
    for (double x : level_crossings(q, b, c0, level)) {
      if (std::isfinite(x)) roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  PhaseWindow w;
  auto phi_at = [&](double x) { return phase(d_omega_pump, x); };
  std::vector<double> current;
  double last_end = 0.0;
  bool have_end = false;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const double lo = roots[i - 1];
    const double hi = roots[i];
    if (!(hi > lo)) continue;
    const bool in = std::abs(phi_at(0.5 * (lo + hi))) <= span;
    if (in) {
      if (current.empty()) {
        if (have_end) w.gaps.emplace_back(last_end, lo);
        current.push_back(lo);
      }
      current.push_back(hi);
    } else if (!current.empty()) {
      w.segments.push_back(std::move(current));
      current.clear();
      last_end = lo;
      have_end = true;
    }
  }
  if (!current.empty()) w.segments.push_back(std::move(current));
  if (w.segments.empty()) throw DomainError("phase window is empty; increase the phase span");
  return w;
}

// int |F(phi(x))|^2 dx over the phase window, F the axial integral.
struct MiddleIntegral {
  double value = 0.0;
  double error = 0.0;
};

template <class AbsSq>
MiddleIntegral integrate_window(const PhaseWindow& w, AbsSq&& abs_sq, double rel_tol) {
  MiddleIntegral out;
  quad::Options opt;
  opt.rel_tol = rel_tol;
  for (const auto& seg : w.segments) {
    opt.max_panels = std::max<std::size_t>(20000, 8 * seg.size());
    const auto r = quad::integrate(abs_sq, std::span<const double>(seg), opt);
    out.value += r.value;
    out.error += r.error;
  }
  return out;
}

// Asymptotic mass of |F|^2 outside the window: for |phi| >> 1 integration
// by parts gives the mean |F|^2 ~ 4 (|f(1)|^2 + |f(-1)|^2) / phi^2, with
// f(l) = 1 / (1 + i l xi - C xi^2 l^2).
double window_tail(const PhaseWindow& w, const PhaseModel& phase, double xi, double C) {
  const double a = C * xi * xi;
  const double S = 1.0 / std::norm(cplx{1.0 - a, xi}) + 1.0 / std::norm(cplx{1.0 - a, -xi});
  auto density = [&](double x) {
    const double phi = phase(0.0, x);
    return 4.0 * S / (phi * phi);
  };
  quad::Options opt;
  opt.rel_tol = 1e-6;
  double tail = 0.0;
  const double left = w.segments.front().front();
  const double right = w.segments.back().back();
  // x = end +/- X s / (1 - s) maps s in [0, 1) onto the half line; X is the
  // window width so the integrand varies on the unit scale.
  const double X = right - left;
  auto half_line = [&](double end, double dir) {
    auto f = [&](double s) {
      const double u = 1.0 - s;
      return density(end + dir * X * s / u) * X / (u * u);
    };
    return quad::integrate(f, 0.0, 1.0, opt).value;
  };
  tail += half_line(right, 1.0) + half_line(left, -1.0);
  for (const auto& [lo, hi] : w.gaps) tail += quad::integrate(density, lo, hi, opt).value;
  return tail;
}

RateResult nested_quadrature(const MaterialOptics& material, const BeamTriple& beams, const PumpSpec& pump,
                             const PhaseModel& phase, const PhysicalConstants& pc, const BruteForceOptions& opt) {
  validate(material);
  if (!(opt.quad_tol > 0.0)) throw DomainError("brute force: quad_tol must be positive");
  if (!(opt.phase_span > 2.0 * kPi)) throw DomainError("brute force: phase span must exceed 2 pi");
  if (!(opt.pump_sigmas > 0.0)) throw DomainError("brute force: pump_sigmas must be positive");
  if (!(pump.bandwidth > 0.0)) throw DomainError("brute force: pump bandwidth must be positive");

  const OverlapParams centre = make_overlap_params(beams, 0.0);
  const double chi = material.chi2_eff();
  const double www = beams.pump.w0 * beams.signal.w0 * beams.idler.w0;
  const double overlap_scale = 2.0 / kPi * std::pow(chi * www * centre.D_norm, 2);
  const double inner_tol = opt.quad_tol * 1e-2;

  auto abs_sq_F = [&](double d_omega_pump) {
    return [&, d_omega_pump](double d_omega_minus) {
      return std::norm(axial_integral(centre.xi_agg, centre.C_quad, phase(d_omega_pump, d_omega_minus), inner_tol));
    };
  };

  // The pump integral int |s|^2 (...) d omega_p is taken over the Gaussian
  // CDF u, which absorbs |s|^2 exactly.
  const boost::math::normal_distribution<double> unit;
  const double u_lo = boost::math::cdf(unit, -opt.pump_sigmas);
  const double u_hi = boost::math::cdf(unit, opt.pump_sigmas);
  auto over_pump = [&](double u) {
    const double d_omega_pump = pump.bandwidth * boost::math::quantile(unit, u);
    const PhaseWindow w = phase_window(phase, d_omega_pump, opt.phase_span);
    return integrate_window(w, abs_sq_F(d_omega_pump), opt.quad_tol).value;
  };
  quad::Options outer;
  outer.rel_tol = opt.quad_tol;
  outer.threads = std::max(1u, opt.threads);
  const auto pumped = quad::integrate(over_pump, u_lo, u_hi, outer);

  const PhaseWindow w0 = phase_window(phase, 0.0, opt.phase_span);
  const MiddleIntegral m0 = integrate_window(w0, abs_sq_F(0.0), opt.quad_tol);
  const double tail = window_tail(w0, phase, centre.xi_agg, centre.C_quad);

  // d omega_1 d omega_2 = (1/2) d omega_p d omega_minus.
  const double photons = 0.5 * jsa_prefactor_sq(material, beams, 1.0, pc) * overlap_scale * pumped.value;

  RateResult r;
  r.pairs_per_pump_photon = photons;
  r.pairs_per_s_per_mW = photons * pump_photons_per_s_per_mW(beams.pump.lambda_vac, pc);
  r.xi_agg = centre.xi_agg;
  r.a_plus_b_plus = centre.a_plus_b_plus;
  r.method = RateMethod::brute_force;
  const double truncation = tail / m0.value + 2.0 * u_lo;
  r.quadrature_error_estimate = pumped.error / std::abs(pumped.value) + opt.quad_tol + truncation;
  return r;
}

}  // namespace

std::string_view to_string(RateMethod method) {
  switch (method) {
    case RateMethod::closed_form:
      return "closed_form";
    case RateMethod::brute_force:
      return "brute_force";
  }
  return "unknown";
}

double pump_photons_per_s_per_mW(double lambda_p, const PhysicalConstants& pc) {
  if (!(lambda_p > 0.0)) throw DomainError("pump wavelength must be positive");
  return kPerMilliwatt / (pc.hbar * angular_frequency(lambda_p, pc));
}

BeamTriple make_beams(const MaterialOptics& material, double lambda_p, double lambda_1, double lambda_2,
                      double w_p, double w_1, double w_2) {
  return make_beam_triple(make_mode(lambda_p, material.n_p, w_p), make_mode(lambda_1, material.n_1, w_1),
                          make_mode(lambda_2, material.n_2, w_2), material.Lz);
}

RateResult pairs_closed_form(const MaterialOptics& material, const BeamTriple& beams, const PhysicalConstants& pc) {
  validate(material);
  require_nondegenerate(material, "pairs_closed_form");
  const OverlapParams p = make_overlap_params(beams, 0.0);
  const double chi = material.chi2_eff();
  const double l1 = beams.signal.lambda_vac;
  const double l2 = beams.idler.lambda_vac;
  const double index_factor = material.ng_1 * material.ng_2 * material.ng_p /
                              (std::pow(material.n_p, 3) * material.n_1 * material.n_2 *
                               std::abs(material.ng_1 - material.ng_2));
  const double prefactor = 64.0 * std::pow(kPi, 3) * pc.hbar * pc.c / pc.epsilon0;

  RateResult r;
  r.pairs_per_pump_photon =
      prefactor * index_factor * chi * chi / (l1 * l1 * l2 * l2) * std::atan(p.xi_agg) / p.a_plus_b_plus;
  r.pairs_per_s_per_mW = r.pairs_per_pump_photon * pump_photons_per_s_per_mW(beams.pump.lambda_vac, pc);
  r.xi_agg = p.xi_agg;
  r.a_plus_b_plus = p.a_plus_b_plus;
  r.method = RateMethod::closed_form;
  return r;
}

double PhaseModel::operator()(double d_omega_pump, double d_omega_minus) const {
  return pump_coeff * d_omega_pump + diff_coeff * d_omega_minus + quad_coeff * d_omega_minus * d_omega_minus +
         qpm_shift;
}

PhaseModel linear_phase_model(const MaterialOptics& m, const PhysicalConstants& pc, double qpm_shift) {
  PhaseModel p;
  p.pump_coeff = (m.ng_1 + m.ng_2 - 2.0 * m.ng_p) * m.Lz / (2.0 * pc.c);
  p.diff_coeff = (m.ng_1 - m.ng_2) * m.Lz / (2.0 * pc.c);
  p.qpm_shift = qpm_shift;
  return p;
}

PhaseModel quadratic_phase_model(const MaterialOptics& m, double kappa0, const PhysicalConstants& pc) {
  if (kappa0 == 0.0 || !std::isfinite(kappa0)) throw DomainError("GVD coefficient kappa0 must be finite and nonzero");
  PhaseModel p = linear_phase_model(m, pc);
  p.quad_coeff = kappa0 * m.Lz / 4.0;
  return p;
}

OverlapEvaluator make_overlap_evaluator(const MaterialOptics& material, const BeamTriple& beams,
                                        const PhaseModel& phase, double quad_tol, const PhysicalConstants& pc) {
  const OverlapParams centre = make_overlap_params(beams, 0.0);
  const double omega_1 = angular_frequency(beams.signal.lambda_vac, pc);
  const double omega_2 = angular_frequency(beams.idler.lambda_vac, pc);
  const double chi = material.chi2_eff();
  const double w_p = beams.pump.w0;
  const double w_1 = beams.signal.w0;
  const double w_2 = beams.idler.w0;
  const double Lz = beams.Lz;
  return [=](double o1, double o2) {
    const double d1 = o1 - omega_1;
    const double d2 = o2 - omega_2;
    OverlapParams p = centre;
    p.phi = phase(d1 + d2, d1 - d2);
    return overlap_simplified(p, chi, w_p, w_1, w_2, Lz, quad_tol);
  };
}

cplx jsa_value(double omega1, double omega2, const PumpSpec& pump, const MaterialOptics& material,
               const BeamTriple& beams, const OverlapEvaluator& overlap, const PhysicalConstants& pc) {
  const double photons = pump.photons_per_pulse.value_or(1.0);
  const double d_omega_pump = omega1 + omega2 - pump.central_omega(pc);
  const double amplitude = std::sqrt(jsa_prefactor_sq(material, beams, photons, pc));
  return amplitude * pump.amplitude(d_omega_pump) * overlap(omega1, omega2);
}

double pair_rate_density(const MaterialOptics& material, const BeamTriple& beams, double delta_k,
                         const PhysicalConstants& pc, double quad_tol) {
  validate(material);
  require_nondegenerate(material, "pair_rate_density");
  MaterialOptics unpoled = material;
  unpoled.poling_period.reset();
  const double overlap_sq = std::norm(overlap_direct(beams, unpoled, delta_k, quad_tol));
  const double slope = std::abs(linear_phase_model(material, pc).diff_coeff);
  return 0.5 * jsa_prefactor_sq(material, beams, 1.0, pc) * overlap_sq * material.Lz / slope *
         pump_photons_per_s_per_mW(beams.pump.lambda_vac, pc);
}

RateResult pairs_via_bruteforce(const MaterialOptics& material, const BeamTriple& beams, const PumpSpec& pump,
                                const PhysicalConstants& pc, const BruteForceOptions& opt) {
  validate(material);
  require_nondegenerate(material, "pairs_via_bruteforce");
  return nested_quadrature(material, beams, pump, linear_phase_model(material, pc), pc, opt);
}

RateResult pairs_degenerate_numeric(const MaterialOptics& material, const BeamTriple& beams, const PumpSpec& pump,
                                    double kappa0, const PhysicalConstants& pc, const BruteForceOptions& opt) {
  return nested_quadrature(material, beams, pump, quadratic_phase_model(material, kappa0, pc), pc, opt);
}

double bennink_ratio(double n_p, double n_1, double n_2, double ng_p, double ng_1, double ng_2,
                     double epsilon_qpm) {
  if (!(epsilon_qpm > 0.0)) throw DomainError("Bennink efficiency factor must be positive");
  return ng_1 * ng_2 * ng_p / (n_1 * n_1 * n_2 * n_2 * n_p * n_p) / epsilon_qpm;
}

double tutorial_correction_factor(double n_p, double n_1, double n_2, double ng_p) {
  if (!(n_p > 0.0)) throw DomainError("pump index must be positive");
  return n_1 * n_2 * ng_p / (n_p * n_p * n_p);
}

double apply_table_correction(double rate_paper, double factor) {
  if (!(factor > 0.0)) throw DomainError("correction factor must be positive");
  return rate_paper * factor;
}

CollimatedRates collimated_limit_rates(const MaterialOptics& m, double lambda_p, double sigma_p, double Lz,
                                       const PhysicalConstants& pc) {
  validate(m);
  require_nondegenerate(m, "collimated_limit_rates");
  if (!(sigma_p > 0.0) || !(Lz > 0.0)) throw DomainError("collimated rates: sigma_p and Lz must be positive");
  const double omega_p = angular_frequency(lambda_p, pc);
  const double common = 1.0 / (16.0 * kPi * pc.epsilon0 * pc.c * pc.c) * m.d_eff * m.d_eff * omega_p * omega_p /
                        std::abs(m.ng_1 - m.ng_2) * kPerMilliwatt / (sigma_p * sigma_p) * Lz;
  CollimatedRates r;
  r.r_sm = common * m.ng_1 * m.ng_2 / (m.n_1 * m.n_1 * m.n_2 * m.n_2 * m.n_p);
  r.r_revised = common * m.ng_1 * m.ng_2 * m.ng_p / (m.n_1 * m.n_2 * std::pow(m.n_p, 4));
  return r;
}

}  // namespace spdc
