#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spdc/constants.hpp"

namespace spdc {

// Functional forms, with lambda in micrometres inside the formula:
//   constant            n = c0
//   sellmeier           n^2 = A + sum_i B_i lambda^2 / (lambda^2 - C_i)   [A, B1, C1, B2, C2, ...]
//   sellmeier_extended  n^2 = A + B / (lambda^2 - C) - D lambda^2         [A, B, C, D]
enum class SellmeierForm { constant, sellmeier, sellmeier_extended };

std::string_view to_string(SellmeierForm form);
SellmeierForm parse_sellmeier_form(std::string_view tag);

struct DispersionModel {
  std::string material_name;
  std::string polarization_axis;
  SellmeierForm form = SellmeierForm::constant;
  std::vector<double> coefficients;
  double lambda_min = 0.0;  // m
  double lambda_max = 0.0;  // m
};

/// Checks coefficient count, range ordering, poles inside the range and
/// n >= 1 across the range. Throws ValidationError.
void validate(const DispersionModel& model);

// Loader for material files ({name, form, coefficients, valid_range_m, axis}).
DispersionModel parse_dispersion_model(std::string_view json_text);
DispersionModel load_dispersion_model(const std::filesystem::path& path);

/// Refractive index at vacuum wavelength `lambda` (m). The closed range
/// [lambda_min, lambda_max] is accepted; anything else is a RangeError.
double refractive_index(const DispersionModel& model, double lambda);

/// n_g = n - lambda dn/dlambda from the analytic derivative of the form.
/// Requires lambda strictly inside the valid range.
double group_index(const DispersionModel& model, double lambda);

/// k = 2 pi n / lambda.
double wavenumber(double n, double lambda);

/// Effective inverse second-order susceptibility
/// zeta = -chi_eff / (eps0^2 n_p^2 n_1^2 n_2^2).
double inverse_chi2(double chi2_eff, double n_p, double n_1, double n_2,
                    const PhysicalConstants& pc = kCodata);

/// Normalized nonlinearity profile along the crystal axis, crystal centred at
/// z = 0: 0 outside |z| <= Lz/2, +1 inside for an unpoled crystal, and a
/// square wave of the given period otherwise, +1 on the domain starting at
/// z = -Lz/2.
int poling_profile(double z, std::optional<double> poling_period, double Lz);

/// Interior sign-flip positions of the poling profile, ascending.
std::vector<double> domain_walls(std::optional<double> poling_period, double Lz);

struct MaterialOptics {
  double n_p = 1.0;
  double n_1 = 1.0;
  double n_2 = 1.0;
  double ng_p = 1.0;
  double ng_1 = 1.0;
  double ng_2 = 1.0;
  double d_eff = 0.0;                   // m/V
  std::optional<double> poling_period;  // m
  double Lz = 0.0;                      // m
  std::optional<double> Lx;             // informational
  std::optional<double> Ly;

  double chi2_eff() const { return 2.0 * d_eff; }
};

/// Throws ValidationError unless all indices >= 1, d_eff >= 0 and Lz > 0.
void validate(const MaterialOptics& material);

/// Indices at the three vacuum wavelengths from per-field dispersion models.
MaterialOptics make_material_optics(const DispersionModel& pump, const DispersionModel& signal,
                                    const DispersionModel& idler, double lambda_p, double lambda_1,
                                    double lambda_2, double d_eff, double Lz,
                                    std::optional<double> poling_period = std::nullopt);

}  // namespace spdc
