#include "acg/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "acg/tame.hpp"
#include "acg/version.hpp"

namespace acg {

OrderedJson report_to_json(const Report& r) {
  OrderedJson out;
  out["meta"] = {{"tool", kToolName},
                 {"version", kVersion},
                 {"command", r.command},
                 {"config_hash", r.config_hash},
                 {"seed", r.seed},
                 {"grid", r.grid},
                 {"tol", r.tol}};
  out["checks"] = OrderedJson::array();
  for (const auto& c : r.checks) {
    OrderedJson jc;
    jc["name"] = c.name;
    jc["verdict"] = verdict_name(c.verdict);
    jc["inputs"] = c.inputs;
    jc["summary"] = c.summary;
    jc["samples"] = c.samples;
    out["checks"].push_back(std::move(jc));
  }
  out["certificates"] = r.certificates;
  return out;
}

namespace {

bool use_color(bool want_color) {
  if (!want_color) return false;
  const char* nc = std::getenv("NO_COLOR");
  return nc == nullptr || nc[0] == '\0';
}

std::string paint(const std::string& s, Verdict v, bool color) {
  if (!color) return s;
  const char* code = "";
  switch (v) {
    case Verdict::Pass: code = "\033[32m"; break;
    case Verdict::Fail: code = "\033[31m"; break;
    case Verdict::Inconclusive: code = "\033[33m"; break;
    case Verdict::Refused: code = "\033[35m"; break;
  }
  return std::string(code) + s + "\033[0m";
}

// min / median / max of any numeric columns found in the samples.
OrderedJson defect_stats(const std::vector<OrderedJson>& samples) {
  std::map<std::string, std::vector<double>> columns;
  for (const auto& s : samples)
    for (auto it = s.begin(); it != s.end(); ++it)
      if (it.value().is_number()) columns[it.key()].push_back(it.value().get<double>());
  OrderedJson out = OrderedJson::object();
  for (auto& [k, v] : columns) {
    std::sort(v.begin(), v.end());
    out[k] = {{"min", v.front()}, {"median", v[v.size() / 2]}, {"max", v.back()}};
  }
  return out;
}

}  // namespace

std::string human_summary(const Report& r, bool color_wanted) {
  const bool color = use_color(color_wanted);
  std::ostringstream os;
  os.precision(3);
  os << kToolName << " " << kVersion << " -- " << r.command << "\n";
  os << "config hash " << r.config_hash << ", seed " << r.seed << ", grid " << r.grid
     << ", tol " << r.tol << "\n\n";
  for (const auto& c : r.checks) {
    os << "[" << paint(verdict_name(c.verdict), c.verdict, color) << "] " << c.name << "\n";
    if (!c.summary.empty()) {
      for (auto it = c.summary.begin(); it != c.summary.end(); ++it)
        os << "    " << it.key() << " = " << it.value().dump() << "\n";
    }
    if (!c.samples.empty()) {
      os << "    samples: " << c.samples.size() << "\n";
      const OrderedJson stats = defect_stats(c.samples);
      for (auto it = stats.begin(); it != stats.end(); ++it)
        os << "      " << it.key() << ": min " << double(it.value()["min"]) << "  median "
           << double(it.value()["median"]) << "  max " << double(it.value()["max"]) << "\n";
    }
  }
  for (const auto& cert : r.certificates) {
    os << "\ncertificate (" << cert.value("verdict", std::string("?")) << "):\n";
    if (cert.contains("refusal_reason") && !cert["refusal_reason"].get<std::string>().empty())
      os << "  refused: " << cert["refusal_reason"].get<std::string>() << "\n";
    if (cert.contains("clauses"))
      for (const auto& cl : cert["clauses"]) os << "  " << cl.get<std::string>() << "\n";
    if (cert.contains("conclusion") && !cert["conclusion"].get<std::string>().empty())
      os << "  => " << cert["conclusion"].get<std::string>() << "\n";
  }
  return os.str();
}

int exit_code_for(const Report& r) {
  bool any_fail = false, any_soft = false;
  for (const auto& c : r.checks) {
    if (c.verdict == Verdict::Fail) any_fail = true;
    if (c.verdict == Verdict::Inconclusive || c.verdict == Verdict::Refused) any_soft = true;
  }
  if (any_fail) return 1;
  if (any_soft) return 2;
  return 0;
}

OrderedJson certificate_to_json(const Certificate& c) {
  OrderedJson out;
  out["verdict"] = verdict_name(c.verdict);
  out["refused"] = c.refused;
  out["refusal_reason"] = c.refusal_reason;
  out["clauses"] = c.clauses;
  out["conclusion"] = c.conclusion;
  out["integral"] = {{"re", c.integral.real()}, {"im", c.integral.imag()}};
  out["margin_min"] = c.margin_min;
  out["margin_max"] = c.margin_max;
  out["theta_given"] = c.theta_given;
  out["theta_verified"] = c.theta_verified;
  out["invariance_defect"] = c.invariance_defect;
  return out;
}

}  // namespace acg
