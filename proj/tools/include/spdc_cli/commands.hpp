#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spdc/focus.hpp"
#include "spdc/rates.hpp"
#include "spdc_cli/config.hpp"

namespace spdc::cli {

struct CommandOptions {
  bool oracle = false;
  std::optional<double> tol;  // overrides run.quad_tol
  bool degenerate = false;
  std::optional<double> kappa0;  // s^2/m
  unsigned threads = 1;
};

/// Beams at the config's waists and wavelengths.
BeamTriple config_beams(const ExperimentConfig& cfg);

BruteForceOptions brute_force_options(const ExperimentConfig& cfg, const CommandOptions& opt);

struct RateReport {
  std::optional<RateResult> closed_form;
  std::optional<RateResult> numeric;  // oracle, or the degenerate path
  double epsilon = 1.0;
  double bennink_ratio = 0.0;
};

RateReport run_rate(const ExperimentConfig& cfg, const CommandOptions& opt);
void print_rate(const RateReport& report, std::ostream& out);

struct ScanRow {
  double x = 0.0;
  double rate = 0.0;  // pairs/s/mW; d(pairs/s/mW)/d(delta_k) for delta_k scans
  double xi_agg = 0.0;
  double a_plus_b_plus = 0.0;
  std::string status = "ok";
};

inline constexpr const char* kScanHeader = "x,pairs_per_s_per_mW,xi_agg,a_plus_b_plus,status";

/// One row per point; failing points carry NaN and an error tag in `status`.
std::vector<ScanRow> run_scan(const ExperimentConfig& cfg, const CommandOptions& opt);
void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out);

struct TableLine {
  TableRow row;
  double computed = 0.0;   // r_paper * factor
  double deviation = 0.0;  // relative to the published revised value
  bool pass = false;
};

struct TableReport {
  double tolerance = 0.0;
  std::vector<TableLine> lines;
  bool all_pass = false;
};

TableReport run_table(const TableConfig& table);
void print_table(const TableReport& report, std::ostream& out);

FocusResult run_optimize(const ExperimentConfig& cfg);
void print_optimize(const FocusResult& result, FocusFamily family, std::ostream& out);

/// printf("%.11e") with "nan"/"inf" spelled out: 12 significant digits.
std::string format_number(double x);

}  // namespace spdc::cli
