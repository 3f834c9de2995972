#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acg/constructions.hpp"
#include "acg/tame.hpp"

namespace acg {

/// Parsed and semantically validated scenario configuration. The schema is
/// strict: unknown keys are rejected with their path. See
/// docs/config.schema.json for the published schema.
struct ScenarioConfig {
  int ambient_dim = 0;
  std::optional<Coframe> coframe;
  std::optional<ScalarField> f;
  std::optional<TauSpec> tau;
  std::optional<ParamSurface> surface;
  bool surface_is_torus = false;
  std::vector<std::string> checks;
  std::map<std::string, double> tolerances;
  int grid = 16;
  std::vector<Eigen::VectorXd> seeds;
  std::optional<FormField> omega;
  std::optional<FormField> theta;

  double tol(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
};

/// Parse + validate a config document. Throws ConfigError with the
/// offending JSON path.
ScenarioConfig parse_config(const nlohmann::json& doc);

/// Load from file: I/O errors and malformed JSON also surface as
/// ConfigError. On success `raw_bytes` (when non-null) receives the exact
/// file contents for hashing.
ScenarioConfig load_config(const std::string& path, std::string* raw_bytes = nullptr);

/// FNV-1a 64-bit content hash, hex encoded; stamps reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace acg
