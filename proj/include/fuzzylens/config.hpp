#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzylens/fuzzy_engine.hpp"

namespace fuzzylens {

/// Serializable description of the whole pipeline. The JSON form is
/// documented in configs/README.md; configs/default_fis.json is the
/// serialized default_config().
struct AppConfig {
  LinguisticVariable input_variable;
  LinguisticVariable output_variable;
  std::vector<Rule> rules;
  int grid_points = kDefaultGridPoints;
  bool luma_conversion = true;

  friend bool operator==(const AppConfig&, const AppConfig&) = default;
};

/// Seven-term intensity input, offset output on [-128, 128], and the
/// seven-rule base.
AppConfig default_config();

/// Parses and validates. Errors are ConfigError with a field path prefix.
AppConfig parse_config(std::string_view json_text);
std::string serialize_config(const AppConfig& config);

/// Name of the environment variable consulted when no path is given.
inline constexpr const char* kConfigEnvVar = "FUZZYLENS_CONFIG";

/// Reads `path` if given, else $FUZZYLENS_CONFIG if set, else the default.
AppConfig load_config(const std::optional<std::filesystem::path>& path);

FisEngine make_engine(const AppConfig& config);

}  // namespace fuzzylens
