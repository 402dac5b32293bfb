// spdc: pair-rate calculator front end.
//
//   spdc rate     --config exp.json [--oracle] [--tol 1e-6] [--degenerate --kappa0 <s^2/m>]
//   spdc scan     --config exp.json [--out scan.csv]
//   spdc table    --config table1.cfg
//   spdc optimize --config exp.json
//
// SPDC_THREADS caps the worker threads used by the brute-force integrator.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spdc/errors.hpp"
#include "spdc_cli/commands.hpp"

namespace {

unsigned threads_from_env() {
  const char* v = std::getenv("SPDC_THREADS");
  if (!v || !*v) return 1;
  try {
    const long n = std::stol(v);
    if (n >= 1) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  std::cerr << "spdc: ignoring invalid SPDC_THREADS='" << v << "'\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace spdc::cli;

  CLI::App app{"Absolute SPDC pair rates for focused Gaussian beams"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  CommandOptions opt;
  double tol = 0.0;
  double kappa0 = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config (JSON, SI units)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", out_path, "write the report or CSV here instead of stdout");
  };
  auto* rate = app.add_subcommand("rate", "closed-form pair rate");
  add_common(rate);
  rate->add_flag("--oracle", opt.oracle, "also run the brute-force frequency integral");
  rate->add_option("--tol", tol, "quadrature tolerance (overrides run.quad_tol)")->check(CLI::PositiveNumber);
  rate->add_flag("--degenerate", opt.degenerate, "numerical rate with quadratic phase mismatch (ng_1 == ng_2)");
  rate->add_option("--kappa0", kappa0, "GVD coefficient for --degenerate, s^2/m");
  auto* scan = app.add_subcommand("scan", "rate versus xi, waist, Lz or delta_k as CSV");
  add_common(scan);
  scan->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  auto* table = app.add_subcommand("table", "apply correction factors to published rates");
  add_common(table);
  auto* optimize = app.add_subcommand("optimize", "focal parameter that maximizes the rate");
  add_common(optimize);

  CLI11_PARSE(app, argc, argv);
  if (tol > 0.0) opt.tol = tol;
  if (rate->count("--kappa0") > 0) opt.kappa0 = kappa0;
  opt.threads = threads_from_env();

  try {
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw spdc::ValidationError("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (*table) {
      const TableReport rep = run_table(load_table(config_path));
      print_table(rep, out);
      return 0;
    }
    const ExperimentConfig cfg = load_config(config_path);
    if (*rate) {
      try {
        print_rate(run_rate(cfg, opt), out);
      } catch (const spdc::DegenerateError& e) {
        throw spdc::DegenerateError(std::string(e.what()) + " [rerun with --degenerate --kappa0 <s^2/m>]");
      }
    } else if (*scan) {
      write_scan_csv(run_scan(cfg, opt), out);
    } else if (*optimize) {
      print_optimize(run_optimize(cfg), cfg.run.optimize->family, out);
    }
    return out ? 0 : 1;
  } catch (const spdc::Error& e) {
    std::cerr << "spdc: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "spdc: unexpected error: " << e.what() << '\n';
    return 1;
  }
}
