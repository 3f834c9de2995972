#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "acg/hypersurf.hpp"

namespace acg {

using OrderedJson = nlohmann::ordered_json;

/// One named check: inputs, per-sample rows, summary scalars and a verdict
/// from the fixed vocabulary {pass, fail, inconclusive, refused}.
struct CheckBlock {
  std::string name;
  OrderedJson inputs = OrderedJson::object();
  OrderedJson summary = OrderedJson::object();
  std::vector<OrderedJson> samples;
  Verdict verdict = Verdict::Inconclusive;
};

/// Deterministic run report: byte-identical for identical config and
/// version (fixed seed recorded; no wall-clock data in the JSON body).
struct Report {
  std::string command;
  std::string config_hash;
  std::uint64_t seed = 0;
  int grid = 0;
  double tol = 0.0;
  std::vector<CheckBlock> checks;
  std::vector<OrderedJson> certificates;
};

OrderedJson report_to_json(const Report& r);
std::string human_summary(const Report& r, bool color);

/// Exit-code contract: 0 all pass; 1 any fail; 2 inconclusive or refused
/// present with no fail.
int exit_code_for(const Report& r);

OrderedJson certificate_to_json(const struct Certificate& c);

}  // namespace acg
