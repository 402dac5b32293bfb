#include "spdc/materials.hpp"

#include <cmath>
#include <sstream>

#include "spdc/errors.hpp"

namespace spdc {
namespace {

constexpr double kMicron = 1e-6;

struct IndexAndSlope {
  double n;
  double dn_dlambda_um;  // per micrometre
};

std::size_t expected_terms(const DispersionModel& m) {
  switch (m.form) {
    case SellmeierForm::constant:
      return 1;
    case SellmeierForm::sellmeier:
      return m.coefficients.size() % 2 == 1 ? m.coefficients.size() : 0;
    case SellmeierForm::sellmeier_extended:
      return 4;
  }
  return 0;
}

// n^2 and d(n^2)/dlambda with lambda in micrometres.
std::pair<double, double> n_squared(const DispersionModel& m, double lambda_um) {
  const auto& c = m.coefficients;
  const double l2 = lambda_um * lambda_um;
  switch (m.form) {
    case SellmeierForm::constant:
      return {c[0] * c[0], 0.0};
    case SellmeierForm::sellmeier: {
      double n2 = c[0];
      double slope = 0.0;
      for (std::size_t i = 1; i + 1 < c.size(); i += 2) {
        const double b = c[i];
        const double pole = c[i + 1];
        const double den = l2 - pole;
        n2 += b * l2 / den;
        slope += -2.0 * b * pole * lambda_um / (den * den);
      }
      return {n2, slope};
    }
    case SellmeierForm::sellmeier_extended: {
      const double den = l2 - c[2];
      const double n2 = c[0] + c[1] / den - c[3] * l2;
      const double slope = -2.0 * c[1] * lambda_um / (den * den) - 2.0 * c[3] * lambda_um;
      return {n2, slope};
    }
  }
  return {0.0, 0.0};
}

IndexAndSlope evaluate(const DispersionModel& m, double lambda) {
  const double lambda_um = lambda / kMicron;
  if (m.form == SellmeierForm::constant) return {m.coefficients[0], 0.0};
  const auto [n2, slope] = n_squared(m, lambda_um);
  const double n = std::sqrt(n2);
  return {n, slope / (2.0 * n)};
}

std::string range_message(const DispersionModel& m, double lambda, const char* bound) {
  std::ostringstream os;
  os << "wavelength " << lambda << " m violates " << bound << " of " << m.material_name << " ("
     << m.polarization_axis << ") valid range [" << m.lambda_min << ", " << m.lambda_max << "] m";
  return os.str();
}

}  // namespace

std::string_view to_string(SellmeierForm form) {
  switch (form) {
    case SellmeierForm::constant:
      return "constant";
    case SellmeierForm::sellmeier:
      return "sellmeier";
    case SellmeierForm::sellmeier_extended:
      return "sellmeier_extended";
  }
  return "unknown";
}

SellmeierForm parse_sellmeier_form(std::string_view tag) {
  if (tag == "constant") return SellmeierForm::constant;
  if (tag == "sellmeier") return SellmeierForm::sellmeier;
  if (tag == "sellmeier_extended") return SellmeierForm::sellmeier_extended;
  throw ValidationError("unknown dispersion form '" + std::string(tag) +
                        "' (expected constant, sellmeier or sellmeier_extended)");
}

void validate(const DispersionModel& m) {
  const std::string who = m.material_name.empty() ? std::string("dispersion model") : m.material_name;
  if (!(m.lambda_min > 0.0) || !(m.lambda_max > m.lambda_min) || !std::isfinite(m.lambda_max)) {
    throw ValidationError(who + ": valid_range_m must satisfy 0 < min < max");
  }
  if (m.coefficients.empty() || expected_terms(m) != m.coefficients.size()) {
    throw ValidationError(who + ": wrong number of coefficients for form " + std::string(to_string(m.form)));
  }
  for (double c : m.coefficients) {
    if (!std::isfinite(c)) throw ValidationError(who + ": non-finite coefficient");
  }

  const double lo2 = std::pow(m.lambda_min / kMicron, 2);
  const double hi2 = std::pow(m.lambda_max / kMicron, 2);
  auto pole_inside = [&](double pole) { return pole >= lo2 && pole <= hi2; };
  if (m.form == SellmeierForm::sellmeier) {
    for (std::size_t i = 2; i < m.coefficients.size(); i += 2) {
      if (pole_inside(m.coefficients[i])) throw ValidationError(who + ": Sellmeier pole inside valid range");
    }
  } else if (m.form == SellmeierForm::sellmeier_extended && pole_inside(m.coefficients[2])) {
    throw ValidationError(who + ": Sellmeier pole inside valid range");
  }

  constexpr int kSamples = 256;
  for (int i = 0; i <= kSamples; ++i) {
    const double lambda = m.lambda_min + (m.lambda_max - m.lambda_min) * i / kSamples;
    const double n = m.form == SellmeierForm::constant ? m.coefficients[0]
                                                       : std::sqrt(n_squared(m, lambda / kMicron).first);
    if (!(n >= 1.0)) {
      std::ostringstream os;
      os << who << ": refractive index " << n << " < 1 at " << lambda << " m";
      throw ValidationError(os.str());
    }
  }
}

double refractive_index(const DispersionModel& model, double lambda) {
  if (!(lambda >= model.lambda_min)) throw RangeError(range_message(model, lambda, "lower bound"));
  if (!(lambda <= model.lambda_max)) throw RangeError(range_message(model, lambda, "upper bound"));
  return evaluate(model, lambda).n;
}

double group_index(const DispersionModel& model, double lambda) {
  if (!(lambda > model.lambda_min)) throw RangeError(range_message(model, lambda, "open lower bound"));
  if (!(lambda < model.lambda_max)) throw RangeError(range_message(model, lambda, "open upper bound"));
  const auto e = evaluate(model, lambda);
  return e.n - (lambda / kMicron) * e.dn_dlambda_um;
}

double wavenumber(double n, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("wavenumber: wavelength must be positive");
  if (!(n >= 1.0)) throw DomainError("wavenumber: refractive index must be >= 1");
  return 2.0 * kPi * n / lambda;
}

double inverse_chi2(double chi2_eff, double n_p, double n_1, double n_2, const PhysicalConstants& pc) {
  if (!(n_p >= 1.0 && n_1 >= 1.0 && n_2 >= 1.0)) throw DomainError("inverse_chi2: indices must be >= 1");
  const double n2 = n_p * n_p * n_1 * n_1 * n_2 * n_2;
  return -chi2_eff / (pc.epsilon0 * pc.epsilon0 * n2);
}

int poling_profile(double z, std::optional<double> poling_period, double Lz) {
  if (poling_period && !(*poling_period > 0.0)) throw DomainError("poling period must be positive");
  if (!(std::abs(z) <= 0.5 * Lz)) return 0;
  if (!poling_period) return 1;
  const double half = 0.5 * *poling_period;
  const auto domain = static_cast<long long>(std::floor((z + 0.5 * Lz) / half));
  return domain % 2 == 0 ? 1 : -1;
}

std::vector<double> domain_walls(std::optional<double> poling_period, double Lz) {
  std::vector<double> walls;
  if (!poling_period) return walls;
  if (!(*poling_period > 0.0)) throw DomainError("poling period must be positive");
  const double half = 0.5 * *poling_period;
  const double end = 0.5 * Lz;
  for (long long m = 1;; ++m) {
    const double z = -end + static_cast<double>(m) * half;
    if (z >= end - 1e-12 * Lz) break;
    walls.push_back(z);
  }
  return walls;
}

void validate(const MaterialOptics& m) {
  for (double n : {m.n_p, m.n_1, m.n_2, m.ng_p, m.ng_1, m.ng_2}) {
    if (!(n >= 1.0) || !std::isfinite(n)) throw ValidationError("material indices must be finite and >= 1");
  }
  if (!(m.d_eff >= 0.0) || !std::isfinite(m.d_eff)) throw ValidationError("d_eff must be finite and >= 0");
  if (!(m.Lz > 0.0) || !std::isfinite(m.Lz)) throw ValidationError("crystal length Lz must be positive");
  if (m.poling_period && !(*m.poling_period > 0.0)) throw ValidationError("poling period must be positive");
}

MaterialOptics make_material_optics(const DispersionModel& pump, const DispersionModel& signal,
                                    const DispersionModel& idler, double lambda_p, double lambda_1,
                                    double lambda_2, double d_eff, double Lz,
                                    std::optional<double> poling_period) {
  MaterialOptics m;
  m.n_p = refractive_index(pump, lambda_p);
  m.n_1 = refractive_index(signal, lambda_1);
  m.n_2 = refractive_index(idler, lambda_2);
  m.ng_p = group_index(pump, lambda_p);
  m.ng_1 = group_index(signal, lambda_1);
  m.ng_2 = group_index(idler, lambda_2);
  m.d_eff = d_eff;
  m.Lz = Lz;
  m.poling_period = poling_period;
  validate(m);
  return m;
}

}  // namespace spdc
