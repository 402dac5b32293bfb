#pragma once

// Experiment configuration files.
//
// JSON, SI base units only (m, W, rad/s, m/V). A string where a number is
// expected ("405nm", "1 mW") is rejected rather than guessed at.
//
// {
//   "material": {
//     "indices":    { "n_p", "n_1", "n_2", "ng_p", "ng_1", "ng_2" }   -- or --
//     "dispersion": { "pump": path, "signal": path, "idler": path },  (relative to the config)
//     "d_eff": m/V, "length": m, "poling_period": m (optional), "epsilon": (optional, default 1)
//   },
//   "beams": { "lambda_p", "lambda_1", "lambda_2", "w_p", "w_1", "w_2" },
//   "pump":  { "power": W, "bandwidth": rad/s, "shape": "gaussian" },
//   "run": {
//     "quad_tol", "phase_span", "pump_sigmas",
//     "scan":     { "variable": "xi|waist|Lz|delta_k", "from", "to", "points",
//                   "spacing": "log|linear", "family": "joint|pump|collection" },
//     "optimize": { "xi_min", "xi_max", "family" }
//   }
// }

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spdc/focus.hpp"
#include "spdc/materials.hpp"
#include "spdc/pump.hpp"

namespace spdc::cli {

enum class ScanVariable { xi, waist, Lz, delta_k };

std::string_view to_string(ScanVariable v);

struct ScanSpec {
  ScanVariable variable = ScanVariable::xi;
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 0;
  bool log_spacing = false;
  FocusFamily family = FocusFamily::collection;
};

struct OptimizeSpec {
  double xi_min = 0.0;
  double xi_max = 0.0;
  FocusFamily family = FocusFamily::collection;
};

struct RunSpec {
  double quad_tol = 1e-6;
  double phase_span = 400.0;
  double pump_sigmas = 6.0;
  std::optional<ScanSpec> scan;
  std::optional<OptimizeSpec> optimize;
};

struct ExperimentConfig {
  MaterialOptics material;
  double epsilon = 1.0;
  double lambda_p = 0.0;
  double lambda_1 = 0.0;
  double lambda_2 = 0.0;
  double w_p = 0.0;
  double w_1 = 0.0;
  double w_2 = 0.0;
  PumpSpec pump;
  RunSpec run;
};

/// Relative tolerance on 1/lambda_p = 1/lambda_1 + 1/lambda_2.
inline constexpr double kEnergyConservationTol = 1e-6;

/// Parses and validates a config. Relative dispersion paths resolve against
/// base_dir. Throws ValidationError naming the offending field.
ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

struct TableRow {
  std::string name;
  double factor = 1.0;
  double r_paper = 0.0;    // pairs/s/mW
  double r_revised = 0.0;  // pairs/s/mW, published revised value
  std::optional<double> r_exp;
  std::optional<double> ng_p;
};

struct TableConfig {
  double tolerance = 0.002;  // relative
  std::vector<TableRow> rows;
};

/// Rows take the correction factor directly ("factor") or from the indices
/// { "n_p", "n_1", "n_2", "ng_p" } as n1 n2 ngp / np^3.
TableConfig parse_table(std::string_view json_text);
TableConfig load_table(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace spdc::cli
