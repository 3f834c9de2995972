// Shared test helpers: finite-difference oracles for the AD kernel, a
// random expression generator for property sweeps, and a small validator
// for the JSON schemas shipped under docs/.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acg/expr.hpp"
#include "acg/sampling.hpp"

namespace acg::test {

// Central finite differences of a complex-valued function; the
// independent oracle for every AD assertion.
inline Eigen::VectorXcd fd_gradient(const std::function<Complex(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& p, double h = 1e-5) {
  Eigen::VectorXcd g(p.size());
  for (int k = 0; k < p.size(); ++k) {
    Eigen::VectorXd pp = p, pm = p;
    pp[k] += h;
    pm[k] -= h;
    g[k] = (f(pp) - f(pm)) / (2.0 * h);
  }
  return g;
}

inline Eigen::MatrixXcd fd_hessian(const std::function<Complex(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& p, double h = 1e-4) {
  const int d = static_cast<int>(p.size());
  Eigen::MatrixXcd H(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Eigen::VectorXd pp = p, pm = p, mp = p, mm = p;
      pp[i] += h; pp[j] += h;
      pm[i] += h; pm[j] -= h;
      mp[i] -= h; mp[j] += h;
      mm[i] -= h; mm[j] -= h;
      H(i, j) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
    }
  }
  return H;
}

// Random expression ASTs up to a given depth, over every node type the
// grammar offers. Emits source text so the parser is always in the loop.
class ExprGen {
public:
  ExprGen(std::uint64_t seed, int dim) : rng_(seed), dim_(dim) {}

  std::string generate(int depth) { return gen(depth); }

private:
  std::string gen(int depth) {
    const int leaf_cut = depth <= 0 ? 100 : 35;
    const int roll = int(rng_.uniform(0, 100));
    if (roll < leaf_cut) return leaf();
    switch (int(rng_.uniform(0, 8))) {
      case 0: return "(" + gen(depth - 1) + " + " + gen(depth - 1) + ")";
      case 1: return "(" + gen(depth - 1) + " - " + gen(depth - 1) + ")";
      case 2: return "(" + gen(depth - 1) + ")*(" + gen(depth - 1) + ")";
      case 3: return "(" + gen(depth - 1) + ")/(" + gen(depth - 1) + " + 3.7)";
      case 4: return "-(" + gen(depth - 1) + ")";
      case 5: return "(" + gen(depth - 1) + ")^" + std::to_string(int(rng_.uniform(0, 4)));
      case 6: {
        static const char* fs[] = {"sin", "cos", "re", "im", "conj", "abs2"};
        return std::string(fs[int(rng_.uniform(0, 6))]) + "(" + gen(depth - 1) + ")";
      }
      default: return "exp(0.3*(" + gen(depth - 1) + "))";
    }
  }

  std::string leaf() {
    switch (int(rng_.uniform(0, 5))) {
      case 0: {
        char buf[32];
        snprintf(buf, sizeof buf, "%.3f", rng_.uniform(0.1, 2.5));
        return buf;
      }
      case 1: return "I";
      case 2: return "x" + std::to_string(1 + int(rng_.uniform(0, dim_)));
      case 3: return "z" + std::to_string(1 + int(rng_.uniform(0, dim_ / 2)));
      default: return "zbar" + std::to_string(1 + int(rng_.uniform(0, dim_ / 2)));
    }
  }

  Rng rng_;
  int dim_;
};

// --- minimal JSON-schema subset validator ---------------------------------
// Supports: type (string or list), required, properties,
// additionalProperties (bool), items (single schema), enum, anyOf,
// minimum/maximum. Enough for the schemas shipped under docs/.
inline void schema_validate(const nlohmann::json& doc, const nlohmann::json& schema,
                            const std::string& path, std::vector<std::string>& errors) {
  using nlohmann::json;
  auto type_ok = [&](const std::string& t) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "number") return doc.is_number();
    if (t == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
    if (t == "boolean") return doc.is_boolean();
    if (t == "null") return doc.is_null();
    return false;
  };
  if (schema.contains("anyOf")) {
    for (const auto& sub : schema["anyOf"]) {
      std::vector<std::string> sub_errors;
      schema_validate(doc, sub, path, sub_errors);
      if (sub_errors.empty()) return;
    }
    errors.push_back(path + ": no anyOf branch matched");
    return;
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_ok(t.get<std::string>());
    } else {
      ok = type_ok(schema["type"].get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": wrong type (" + schema["type"].dump() + " expected)");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema["enum"]) ok = ok || v == doc;
    if (!ok) errors.push_back(path + ": value not in enum");
  }
  if (doc.is_number()) {
    if (schema.contains("minimum") && doc.get<double>() < schema["minimum"].get<double>())
      errors.push_back(path + ": below minimum");
    if (schema.contains("maximum") && doc.get<double>() > schema["maximum"].get<double>())
      errors.push_back(path + ": above maximum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!doc.contains(k.get<std::string>()))
          errors.push_back(path + ": missing required key '" + k.get<std::string>() + "'");
    const json props = schema.value("properties", json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        schema_validate(it.value(), props[it.key()], path + "/" + it.key(), errors);
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        errors.push_back(path + ": unexpected key '" + it.key() + "'");
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& el : doc) {
      schema_validate(el, schema["items"], path + "/" + std::to_string(i), errors);
      ++i;
    }
  }
}

inline std::vector<std::string> schema_errors(const nlohmann::json& doc,
                                              const nlohmann::json& schema) {
  std::vector<std::string> errors;
  schema_validate(doc, schema, "", errors);
  return errors;
}

}  // namespace acg::test
