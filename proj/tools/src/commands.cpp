#include "spdc_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "spdc/errors.hpp"

namespace spdc::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string status_of(const std::exception& e) {
  if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate";
  if (dynamic_cast<const RangeError*>(&e)) return "out_of_range";
  if (dynamic_cast<const SingularityError*>(&e)) return "singular";
  if (dynamic_cast<const NumericalError*>(&e)) return "numerical";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const ValidationError*>(&e)) return "invalid";
  return "error";
}

double scan_point(const ScanSpec& s, std::size_t i) {
  if (i + 1 == s.points) return s.to;
  const double t = static_cast<double>(i) / static_cast<double>(s.points - 1);
  if (s.log_spacing) return std::exp(std::log(s.from) + t * (std::log(s.to) - std::log(s.from)));
  return s.from + t * (s.to - s.from);
}

double quad_tol(const ExperimentConfig& cfg, const CommandOptions& opt) { return opt.tol.value_or(cfg.run.quad_tol); }

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

BeamTriple config_beams(const ExperimentConfig& cfg) {
  return make_beams(cfg.material, cfg.lambda_p, cfg.lambda_1, cfg.lambda_2, cfg.w_p, cfg.w_1, cfg.w_2);
}

BruteForceOptions brute_force_options(const ExperimentConfig& cfg, const CommandOptions& opt) {
  BruteForceOptions bf;
  bf.quad_tol = quad_tol(cfg, opt);
  bf.phase_span = cfg.run.phase_span;
  bf.pump_sigmas = cfg.run.pump_sigmas;
  bf.threads = std::max(1u, opt.threads);
  return bf;
}

RateReport run_rate(const ExperimentConfig& cfg, const CommandOptions& opt) {
  const BeamTriple beams = config_beams(cfg);
  const MaterialOptics& m = cfg.material;
  RateReport r;
  r.epsilon = cfg.epsilon;
  r.bennink_ratio = bennink_ratio(m.n_p, m.n_1, m.n_2, m.ng_p, m.ng_1, m.ng_2, cfg.epsilon);
  if (opt.degenerate) {
    if (!opt.kappa0) throw ValidationError("--degenerate requires --kappa0 <s^2/m>");
    r.numeric = pairs_degenerate_numeric(m, beams, cfg.pump, *opt.kappa0, kCodata, brute_force_options(cfg, opt));
    return r;
  }
  r.closed_form = pairs_closed_form(m, beams);
  if (opt.oracle) r.numeric = pairs_via_bruteforce(m, beams, cfg.pump, kCodata, brute_force_options(cfg, opt));
  return r;
}

void print_rate(const RateReport& r, std::ostream& out) {
  const RateResult& shape = r.closed_form ? *r.closed_form : *r.numeric;
  out << "xi_agg: " << format_number(shape.xi_agg) << '\n';
  out << "a_plus_b_plus: " << format_number(shape.a_plus_b_plus) << '\n';
  if (r.closed_form) {
    out << "closed_form_pairs_per_pump_photon: " << format_number(r.closed_form->pairs_per_pump_photon) << '\n';
    out << "closed_form_pairs_per_s_per_mW: " << format_number(r.closed_form->pairs_per_s_per_mW) << '\n';
  }
  if (r.numeric) {
    const char* label = r.closed_form ? "brute_force" : "degenerate_numeric";
    out << label << "_pairs_per_s_per_mW: " << format_number(r.numeric->pairs_per_s_per_mW) << '\n';
    out << label << "_error_estimate: " << format_number(r.numeric->quadrature_error_estimate.value_or(kNaN)) << '\n';
    if (r.closed_form) {
      const double cf = r.closed_form->pairs_per_s_per_mW;
      const double dev = cf != 0.0 ? (r.numeric->pairs_per_s_per_mW - cf) / cf : (r.numeric->pairs_per_s_per_mW == 0.0 ? 0.0 : kNaN);
      out << "relative_deviation: " << format_number(dev) << '\n';
    }
  }
  out << "bennink_ratio: " << format_number(r.bennink_ratio) << " (epsilon = " << format_number(r.epsilon) << ")\n";
}

std::vector<ScanRow> run_scan(const ExperimentConfig& cfg, const CommandOptions& opt) {
  if (!cfg.run.scan) throw ValidationError("scan needs a 'run.scan' block in the config");
  const ScanSpec& s = *cfg.run.scan;
  const double tol = quad_tol(cfg, opt);
  const BeamTriple base = config_beams(cfg);

  std::vector<ScanRow> rows;
  rows.reserve(s.points);
  for (std::size_t i = 0; i < s.points; ++i) {
    ScanRow row;
    row.x = scan_point(s, i);
    try {
      MaterialOptics m = cfg.material;
      BeamTriple beams = base;
      switch (s.variable) {
        case ScanVariable::xi:
          beams = apply_focus(base, s.family, row.x);
          break;
        case ScanVariable::waist:
          beams = make_beams(m, cfg.lambda_p, cfg.lambda_1, cfg.lambda_2, row.x, cfg.w_1, cfg.w_2);
          break;
        case ScanVariable::Lz:
          m.Lz = row.x;
          beams = make_beams(m, cfg.lambda_p, cfg.lambda_1, cfg.lambda_2, cfg.w_p, cfg.w_1, cfg.w_2);
          break;
        case ScanVariable::delta_k:
          break;
      }
      const OverlapParams p = make_overlap_params(beams, 0.0);
      row.xi_agg = p.xi_agg;
      row.a_plus_b_plus = p.a_plus_b_plus;
      row.rate = s.variable == ScanVariable::delta_k ? pair_rate_density(m, beams, row.x, kCodata, tol)
                                                    : pairs_closed_form(m, beams).pairs_per_s_per_mW;
    } catch (const Error& e) {
      row.rate = kNaN;
      row.status = status_of(e);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << kScanHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.rate) << ',' << format_number(r.xi_agg) << ','
        << format_number(r.a_plus_b_plus) << ',' << r.status << '\n';
  }
}

TableReport run_table(const TableConfig& table) {
  TableReport rep;
  rep.tolerance = table.tolerance;
  rep.all_pass = true;
  for (const auto& row : table.rows) {
    TableLine line;
    line.row = row;
    line.computed = apply_table_correction(row.r_paper, row.factor);
    line.deviation = (line.computed - row.r_revised) / row.r_revised;
    line.pass = std::abs(line.deviation) <= table.tolerance;
    rep.all_pass = rep.all_pass && line.pass;
    rep.lines.push_back(line);
  }
  return rep;
}

void print_table(const TableReport& rep, std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-24s %10s %9s %10s %10s %10s %10s  %s\n", "row", "paper", "factor", "revised",
                "published", "exp", "delta", "result");
  out << buf;
  for (const auto& l : rep.lines) {
    const double exp = l.row.r_exp.value_or(kNaN);
    std::snprintf(buf, sizeof buf, "%-24s %10.4f %9.5f %10.4f %10.4f %10.4f %+9.4f%%  %s\n", l.row.name.c_str(),
                  l.row.r_paper * 1e-6, l.row.factor, l.computed * 1e-6, l.row.r_revised * 1e-6, exp * 1e-6,
                  100.0 * l.deviation, l.pass ? "PASS" : "FAIL");
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "rates in 1e6 pairs/s/mW; tolerance %.3g%%: %s\n", 100.0 * rep.tolerance,
                rep.all_pass ? "all rows PASS" : "some rows FAIL");
  out << buf;
}

FocusResult run_optimize(const ExperimentConfig& cfg) {
  if (!cfg.run.optimize) throw ValidationError("optimize needs a 'run.optimize' block in the config");
  const OptimizeSpec& o = *cfg.run.optimize;
  return focus_optimize(cfg.material, config_beams(cfg), kCodata, o.xi_min, o.xi_max, o.family);
}

void print_optimize(const FocusResult& r, FocusFamily family, std::ostream& out) {
  out << "family: " << to_string(family) << '\n';
  out << "xi_opt: " << format_number(r.xi_opt) << '\n';
  out << "w_p: " << format_number(r.beams.pump.w0) << '\n';
  out << "w_1: " << format_number(r.beams.signal.w0) << '\n';
  out << "w_2: " << format_number(r.beams.idler.w0) << '\n';
  out << "pairs_per_s_per_mW: " << format_number(r.rate_max) << '\n';
  out << "at_boundary: " << (r.at_boundary ? "yes" : "no") << '\n';
  out << "dense_scan_fallback: " << (r.used_dense_scan ? "yes" : "no") << '\n';
  out << "evaluations: " << r.evaluations << '\n';
}

}  // namespace spdc::cli
