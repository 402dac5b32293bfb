#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spdc/errors.hpp"
#include "spdc/materials.hpp"

namespace spdc {

DispersionModel parse_dispersion_model(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("material file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("material file must hold a JSON object");
  for (const char* key : {"name", "form", "coefficients", "valid_range_m"}) {
    if (!doc.contains(key)) throw ValidationError(std::string("material file missing field '") + key + "'");
  }

  DispersionModel m;
  try {
    m.material_name = doc.at("name").get<std::string>();
    m.polarization_axis = doc.value("axis", std::string{});
    m.form = parse_sellmeier_form(doc.at("form").get<std::string>());
    m.coefficients = doc.at("coefficients").get<std::vector<double>>();
    const auto range = doc.at("valid_range_m").get<std::vector<double>>();
    if (range.size() != 2) throw ValidationError("valid_range_m must be a [min, max] pair in meters");
    m.lambda_min = range[0];
    m.lambda_max = range[1];
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("material file field has the wrong type: ") + e.what());
  }
  validate(m);
  return m;
}

DispersionModel load_dispersion_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open material file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_dispersion_model(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace spdc
