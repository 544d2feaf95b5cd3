#include "fuzzylens/config.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace fuzzylens {

using nlohmann::json;

AppConfig default_config() {
  using MF = MembershipFunction;
  AppConfig cfg;
  cfg.input_variable = {"intensity",
                        {0.0, 255.0},
                        {{"Very Dark", MF::trapezoid(0, 0, 10, 40)},
                         {"Dark", MF::gaussian(42, 18)},
                         {"Dark Gray", MF::gaussian(85, 18)},
                         {"Gray", MF::gaussian(128, 18)},
                         {"Light Gray", MF::gaussian(170, 18)},
                         {"Bright", MF::gaussian(212, 18)},
                         {"Very Bright", MF::trapezoid(215, 245, 255, 255)}}};
  cfg.output_variable = {"offset",
                         {-128.0, 128.0},
                         {{"Very Dark", MF::gaussian(-64, 16)},
                          {"Slightly Dark", MF::gaussian(-24, 16)},
                          {"No Change", MF::gaussian(0, 16)},
                          {"Slightly Bright", MF::gaussian(24, 16)}}};
  cfg.rules = {
      {"Very Dark", "Slightly Dark"},   {"Dark Gray", "Slightly Dark"}, {"Gray", "Slightly Dark"},
      {"Bright", "Slightly Bright"},    {"Dark", "Very Dark"},          {"Very Bright", "No Change"},
      {"Light Gray", "Slightly Dark"},
  };
  cfg.grid_points = kDefaultGridPoints;
  cfg.luma_conversion = true;
  return cfg;
}

namespace {

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError(path + "." + key + ": unknown key");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path + "." + key + ": required key is missing");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + ": expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path + ": expected a string");
  return j.get<std::string>();
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  return j;
}

const json& as_array(const json& j, const std::string& path, std::size_t exact_size = 0) {
  if (!j.is_array()) throw ConfigError(path + ": expected an array");
  if (exact_size != 0 && j.size() != exact_size) {
    throw ConfigError(path + ": expected " + std::to_string(exact_size) + " elements");
  }
  return j;
}

MembershipFunction parse_mf(const json& term, const std::string& path) {
  const std::string type = as_string(require(term, "type", path), path + ".type");
  try {
    if (type == "gaussian") {
      reject_unknown_keys(term, path, {"label", "type", "center", "sigma"});
      return MembershipFunction::gaussian(as_number(require(term, "center", path), path + ".center"),
                                          as_number(require(term, "sigma", path), path + ".sigma"));
    }
    if (type == "trapezoid") {
      reject_unknown_keys(term, path, {"label", "type", "points"});
      const json& pts = as_array(require(term, "points", path), path + ".points", 4);
      double p[4];
      for (std::size_t i = 0; i < 4; ++i) p[i] = as_number(pts[i], path + ".points[" + std::to_string(i) + "]");
      return MembershipFunction::trapezoid(p[0], p[1], p[2], p[3]);
    }
  } catch (const std::invalid_argument& e) {
    // Factory messages already start with the field name.
    throw ConfigError(path + "." + e.what());
  }
  throw ConfigError(path + ".type: unknown membership function '" + type + "' (expected gaussian or trapezoid)");
}

LinguisticVariable parse_variable(const json& j, const std::string& path) {
  as_object(j, path);
  reject_unknown_keys(j, path, {"name", "universe", "terms"});
  LinguisticVariable var;
  var.name = as_string(require(j, "name", path), path + ".name");
  const json& u = as_array(require(j, "universe", path), path + ".universe", 2);
  var.universe = {as_number(u[0], path + ".universe[0]"), as_number(u[1], path + ".universe[1]")};
  const json& terms = as_array(require(j, "terms", path), path + ".terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    const json& t = as_object(terms[i], tp);
    var.terms.push_back({as_string(require(t, "label", tp), tp + ".label"), parse_mf(t, tp)});
  }
  return var;
}

// Serialization keeps keys in a readable order; parsing does not care.
using ordered_json = nlohmann::ordered_json;

ordered_json term_to_json(const Term& term) {
  ordered_json j = {{"label", term.label}};
  if (const auto* g = std::get_if<Gaussian>(&term.mf.shape())) {
    j["type"] = "gaussian";
    j["center"] = g->center;
    j["sigma"] = g->sigma;
  } else {
    const auto& t = std::get<Trapezoid>(term.mf.shape());
    j["type"] = "trapezoid";
    j["points"] = {t.a, t.b, t.c, t.d};
  }
  return j;
}

ordered_json variable_to_json(const LinguisticVariable& var) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : var.terms) terms.push_back(term_to_json(t));
  ordered_json j;
  j["name"] = var.name;
  j["universe"] = {var.universe.lo, var.universe.hi};
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

AppConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
  const std::string path = "config";
  if (!root.is_object()) throw ConfigError("config: expected a JSON object");
  reject_unknown_keys(root, path, {"input_variable", "output_variable", "rules", "grid_points", "luma_conversion"});

  AppConfig cfg;
  cfg.input_variable = parse_variable(require(root, "input_variable", path), "input_variable");
  cfg.output_variable = parse_variable(require(root, "output_variable", path), "output_variable");

  const json& rules = as_array(require(root, "rules", path), "rules");
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const std::string rp = "rules[" + std::to_string(i) + "]";
    const json& r = as_object(rules[i], rp);
    reject_unknown_keys(r, rp, {"if", "then"});
    cfg.rules.push_back({as_string(require(r, "if", rp), rp + ".if"), as_string(require(r, "then", rp), rp + ".then")});
  }

  if (auto it = root.find("grid_points"); it != root.end()) {
    if (!it->is_number_integer()) throw ConfigError("grid_points: expected an integer");
    cfg.grid_points = it->get<int>();
  }
  if (auto it = root.find("luma_conversion"); it != root.end()) {
    if (!it->is_boolean()) throw ConfigError("luma_conversion: expected true or false");
    cfg.luma_conversion = it->get<bool>();
  }

  make_engine(cfg);
  return cfg;
}

std::string serialize_config(const AppConfig& config) {
  ordered_json rules = ordered_json::array();
  for (const Rule& r : config.rules) rules.push_back({{"if", r.antecedent}, {"then", r.consequent}});
  ordered_json root;
  root["input_variable"] = variable_to_json(config.input_variable);
  root["output_variable"] = variable_to_json(config.output_variable);
  root["rules"] = std::move(rules);
  root["grid_points"] = config.grid_points;
  root["luma_conversion"] = config.luma_conversion;
  return root.dump(2) + "\n";
}

AppConfig load_config(const std::optional<std::filesystem::path>& path) {
  std::optional<std::filesystem::path> source = path;
  if (!source) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') source = env;
  }
  if (!source) return default_config();

  std::ifstream in(*source, std::ios::binary);
  if (!in) throw ConfigError(source->string() + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(source->string() + ": " + e.what());
  }
}

FisEngine make_engine(const AppConfig& config) {
  return FisEngine(config.input_variable, config.output_variable, config.rules, config.grid_points);
}

}  // namespace fuzzylens
