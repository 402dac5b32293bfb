#include "spdc_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spdc/errors.hpp"
#include "spdc/rates.hpp"

namespace spdc::cli {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ValidationError("missing field '" + where + key + "'");
  return obj.at(key);
}

const json* find(const json& obj, const std::string& key) {
  if (!obj.is_object()) return nullptr;
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double as_number(const json& v, const std::string& field) {
  if (v.is_string()) {
    throw ValidationError("field '" + field + "' must be a number in SI base units; got the string \"" +
                          v.get<std::string>() + "\" (unit suffixes are not accepted)");
  }
  if (!v.is_number()) throw ValidationError("field '" + field + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError("field '" + field + "' must be finite");
  return x;
}

double number(const json& obj, const std::string& key, const std::string& where) {
  return as_number(require(obj, key, where), where + key);
}

double positive(const json& obj, const std::string& key, const std::string& where) {
  const double x = number(obj, key, where);
  if (!(x > 0.0)) throw ValidationError("field '" + where + key + "' must be positive");
  return x;
}

std::optional<double> optional_number(const json& obj, const std::string& key, const std::string& where) {
  const json* v = find(obj, key);
  if (!v || v->is_null()) return std::nullopt;
  return as_number(*v, where + key);
}

std::string text(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw ValidationError("field '" + where + key + "' must be a string");
  return v.get<std::string>();
}

json parse_json(std::string_view text_in, const char* what) {
  try {
    return json::parse(text_in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

MaterialOptics parse_material(const json& m, const ExperimentConfig& cfg, const std::filesystem::path& base_dir) {
  const std::string where = "material.";
  MaterialOptics out;
  const double d_eff = number(m, "d_eff", where);
  if (!(d_eff >= 0.0)) throw ValidationError("field 'material.d_eff' must be >= 0");
  const double Lz = positive(m, "length", where);
  std::optional<double> period = optional_number(m, "poling_period", where);
  if (period && !(*period > 0.0)) throw ValidationError("field 'material.poling_period' must be positive");

  const json* indices = find(m, "indices");
  const json* dispersion = find(m, "dispersion");
  if ((indices != nullptr) == (dispersion != nullptr)) {
    throw ValidationError("material block needs exactly one of 'indices' or 'dispersion'");
  }
  if (indices) {
    const std::string w = where + "indices.";
    out.n_p = number(*indices, "n_p", w);
    out.n_1 = number(*indices, "n_1", w);
    out.n_2 = number(*indices, "n_2", w);
    out.ng_p = number(*indices, "ng_p", w);
    out.ng_1 = number(*indices, "ng_1", w);
    out.ng_2 = number(*indices, "ng_2", w);
    out.d_eff = d_eff;
    out.Lz = Lz;
    out.poling_period = period;
    validate(out);
    return out;
  }
  const std::string w = where + "dispersion.";
  auto model = [&](const char* key) {
    std::filesystem::path p = text(*dispersion, key, w);
    if (p.is_relative()) p = base_dir / p;
    return load_dispersion_model(p);
  };
  return make_material_optics(model("pump"), model("signal"), model("idler"), cfg.lambda_p, cfg.lambda_1,
                              cfg.lambda_2, d_eff, Lz, period);
}

ScanSpec parse_scan(const json& s) {
  const std::string where = "run.scan.";
  ScanSpec out;
  const std::string var = text(s, "variable", where);
  if (var == "xi") {
    out.variable = ScanVariable::xi;
  } else if (var == "waist") {
    out.variable = ScanVariable::waist;
  } else if (var == "Lz") {
    out.variable = ScanVariable::Lz;
  } else if (var == "delta_k") {
    out.variable = ScanVariable::delta_k;
  } else {
    throw ValidationError("field 'run.scan.variable' must be one of xi, waist, Lz, delta_k (got '" + var + "')");
  }
  out.from = number(s, "from", where);
  out.to = number(s, "to", where);
  const double points = number(s, "points", where);
  if (!(points >= 2.0) || points != std::floor(points)) {
    throw ValidationError("field 'run.scan.points' must be an integer >= 2");
  }
  out.points = static_cast<std::size_t>(points);
  if (!(out.to > out.from)) throw ValidationError("run.scan range must satisfy from < to");
  out.log_spacing = out.variable == ScanVariable::xi;
  if (const json* sp = find(s, "spacing")) {
    const std::string v = sp->is_string() ? sp->get<std::string>() : "";
    if (v == "log") {
      out.log_spacing = true;
    } else if (v == "linear") {
      out.log_spacing = false;
    } else {
      throw ValidationError("field 'run.scan.spacing' must be \"log\" or \"linear\"");
    }
  }
  if (out.log_spacing && !(out.from > 0.0)) throw ValidationError("log-spaced scan needs from > 0");
  if (out.variable != ScanVariable::delta_k && !(out.from > 0.0)) {
    throw ValidationError("run.scan range for " + var + " must be positive");
  }
  if (find(s, "family")) out.family = parse_focus_family(text(s, "family", where));
  return out;
}

OptimizeSpec parse_optimize(const json& o) {
  const std::string where = "run.optimize.";
  OptimizeSpec out;
  out.xi_min = number(o, "xi_min", where);
  out.xi_max = number(o, "xi_max", where);
  if (!(out.xi_min > 0.0) || !(out.xi_max > out.xi_min)) {
    throw ValidationError("run.optimize range must satisfy 0 < xi_min < xi_max");
  }
  if (find(o, "family")) out.family = parse_focus_family(text(o, "family", where));
  return out;
}

}  // namespace

std::string_view to_string(ScanVariable v) {
  switch (v) {
    case ScanVariable::xi:
      return "xi";
    case ScanVariable::waist:
      return "waist";
    case ScanVariable::Lz:
      return "Lz";
    case ScanVariable::delta_k:
      return "delta_k";
  }
  return "unknown";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(json_text, "config");
  if (!doc.is_object()) throw ValidationError("config must hold a JSON object");
  ExperimentConfig cfg;

  const json& beams = require(doc, "beams", "");
  cfg.lambda_p = positive(beams, "lambda_p", "beams.");
  cfg.lambda_1 = positive(beams, "lambda_1", "beams.");
  cfg.lambda_2 = positive(beams, "lambda_2", "beams.");
  cfg.w_p = positive(beams, "w_p", "beams.");
  cfg.w_1 = positive(beams, "w_1", "beams.");
  cfg.w_2 = positive(beams, "w_2", "beams.");
  const double inv_p = 1.0 / cfg.lambda_p;
  const double mismatch = std::abs(inv_p - 1.0 / cfg.lambda_1 - 1.0 / cfg.lambda_2) / inv_p;
  if (mismatch > kEnergyConservationTol) {
    std::ostringstream os;
    os << "energy conservation violated: 1/lambda_p - 1/lambda_1 - 1/lambda_2 is " << mismatch
       << " of 1/lambda_p (tolerance " << kEnergyConservationTol << ")";
    throw ValidationError(os.str());
  }

  const json& material = require(doc, "material", "");
  cfg.material = parse_material(material, cfg, base_dir);
  if (auto eps = optional_number(material, "epsilon", "material.")) {
    if (!(*eps > 0.0)) throw ValidationError("field 'material.epsilon' must be positive");
    cfg.epsilon = *eps;
  }

  const json& pump = require(doc, "pump", "");
  const double power = positive(pump, "power", "pump.");
  const double bandwidth = positive(pump, "bandwidth", "pump.");
  const SpectralShape shape =
      find(pump, "shape") ? parse_spectral_shape(text(pump, "shape", "pump.")) : SpectralShape::gaussian;
  cfg.pump = make_pump_spec(power, cfg.lambda_p, bandwidth, shape);

  if (const json* run = find(doc, "run")) {
    if (auto v = optional_number(*run, "quad_tol", "run.")) cfg.run.quad_tol = *v;
    if (auto v = optional_number(*run, "phase_span", "run.")) cfg.run.phase_span = *v;
    if (auto v = optional_number(*run, "pump_sigmas", "run.")) cfg.run.pump_sigmas = *v;
    if (!(cfg.run.quad_tol > 0.0 && cfg.run.quad_tol < 1.0)) throw ValidationError("field 'run.quad_tol' must be in (0, 1)");
    if (!(cfg.run.phase_span > 0.0)) throw ValidationError("field 'run.phase_span' must be positive");
    if (!(cfg.run.pump_sigmas > 0.0)) throw ValidationError("field 'run.pump_sigmas' must be positive");
    if (const json* s = find(*run, "scan")) cfg.run.scan = parse_scan(*s);
    if (const json* o = find(*run, "optimize")) cfg.run.optimize = parse_optimize(*o);
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const std::string body = read_text_file(path);
  try {
    return parse_config(body, path.parent_path());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

TableConfig parse_table(std::string_view json_text) {
  const json doc = parse_json(json_text, "table config");
  TableConfig t;
  if (auto tol = optional_number(doc, "tolerance", "")) {
    if (!(*tol > 0.0)) throw ValidationError("field 'tolerance' must be positive");
    t.tolerance = *tol;
  }
  const json& rows = require(doc, "rows", "");
  if (!rows.is_array() || rows.empty()) throw ValidationError("field 'rows' must be a non-empty array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& r = rows[i];
    const std::string where = "rows[" + std::to_string(i) + "].";
    TableRow row;
    row.name = text(r, "name", where);
    row.r_paper = positive(r, "r_paper", where);
    row.r_revised = positive(r, "r_revised", where);
    row.r_exp = optional_number(r, "r_exp", where);
    row.ng_p = optional_number(r, "ng_p", where);
    const json* factor = find(r, "factor");
    const json* indices = find(r, "indices");
    if ((factor != nullptr) == (indices != nullptr)) {
      throw ValidationError("row '" + row.name + "' needs exactly one of 'factor' or 'indices'");
    }
    if (factor) {
      row.factor = positive(r, "factor", where);
    } else {
      const std::string w = where + "indices.";
      row.factor = tutorial_correction_factor(positive(*indices, "n_p", w), positive(*indices, "n_1", w),
                                              positive(*indices, "n_2", w), positive(*indices, "ng_p", w));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TableConfig load_table(const std::filesystem::path& path) {
  const std::string body = read_text_file(path);
  try {
    return parse_table(body);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace spdc::cli
