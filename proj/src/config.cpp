#include "acg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "acg/errors.hpp"

namespace acg {

namespace {

using nlohmann::json;

[[noreturn]] void reject(const std::string& msg, const std::string& path) {
  throw ConfigError(msg, path.empty() ? "/" : path);
}

void require_keys(const json& obj, const std::set<std::string>& known, const std::string& path) {
  if (!obj.is_object()) reject("expected an object", path);
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) reject("unknown key '" + it.key() + "'", path + "/" + it.key());
}

int require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) reject("expected an integer", path);
  return v.get<int>();
}

double require_num(const json& v, const std::string& path) {
  if (!v.is_number()) reject("expected a number", path);
  return v.get<double>();
}

std::string require_str(const json& v, const std::string& path) {
  if (!v.is_string()) reject("expected a string", path);
  return v.get<std::string>();
}

ScalarField parse_expr_field(const json& v, int dim, const std::string& path) {
  const std::string text = require_str(v, path);
  try {
    return ScalarField::from_expr(text, dim);
  } catch (const ParseError& e) {
    reject("bad expression (" + std::string(e.what()) + " at byte " +
               std::to_string(e.offset()) + ", expected " + e.expected() + ")",
           path);
  }
}

Coframe parse_coframe(const json& rows, int dim, const std::string& path) {
  if (!rows.is_array()) reject("expected an array of coframe rows", path);
  const int n = dim / 2;
  if (static_cast<int>(rows.size()) != n)
    reject("coframe must have " + std::to_string(n) + " rows for ambient dimension " +
               std::to_string(dim),
           path);
  Coframe C;
  C.dim = dim;
  C.name = "config";
  for (int i = 0; i < n; ++i) {
    const std::string rpath = path + "/" + std::to_string(i);
    require_keys(rows[i], {"dz", "dzbar"}, rpath);
    if (!rows[i].contains("dz") || !rows[i].contains("dzbar"))
      reject("coframe row needs 'dz' and 'dzbar' coefficient lists", rpath);
    const json& dz = rows[i]["dz"];
    const json& dzbar = rows[i]["dzbar"];
    if (!dz.is_array() || static_cast<int>(dz.size()) != n)
      reject("'dz' must list " + std::to_string(n) + " coefficients", rpath + "/dz");
    if (!dzbar.is_array() || static_cast<int>(dzbar.size()) != n)
      reject("'dzbar' must list " + std::to_string(n) + " coefficients", rpath + "/dzbar");
    FormField alpha(dim, 1);
    for (int j = 0; j < n; ++j) {
      alpha += FormField::dz(j + 1, dim).smul(
          parse_expr_field(dz[j], dim, rpath + "/dz/" + std::to_string(j)));
      alpha += FormField::dzbar(j + 1, dim).smul(
          parse_expr_field(dzbar[j], dim, rpath + "/dzbar/" + std::to_string(j)));
    }
    C.alpha.push_back(std::move(alpha));
  }
  return C;
}

TauSpec parse_tau_spec(const json& v, const std::string& path) {
  require_keys(v, {"n", "tau", "taubar"}, path);
  if (!v.contains("n") || !v.contains("tau") || !v.contains("taubar"))
    reject("tau needs 'n', 'tau' and 'taubar'", path);
  TauSpec t;
  t.n = require_int(v["n"], path + "/n");
  if (t.n < 1 || t.n > 4) reject("tau: n must be in 1..4", path + "/n");
  auto matrix = [&](const json& m, const std::string& mpath) {
    if (!m.is_array() || static_cast<int>(m.size()) != t.n)
      reject("expected an array of " + std::to_string(t.n) + " rows", mpath);
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i < t.n; ++i) {
      const json& row = m[i];
      const std::string rpath = mpath + "/" + std::to_string(i);
      if (!row.is_array() || static_cast<int>(row.size()) != t.n)
        reject("expected a row of " + std::to_string(t.n) + " expressions", rpath);
      std::vector<std::string> r;
      for (int j = 0; j < t.n; ++j) {
        const std::string epath = rpath + "/" + std::to_string(j);
        r.push_back(require_str(row[j], epath));
        parse_expr_field(row[j], 2 * t.n, epath);  // validate eagerly
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  t.tau = matrix(v["tau"], path + "/tau");
  t.taubar = matrix(v["taubar"], path + "/taubar");
  return t;
}

FormField parse_omega(const json& v, int dim, const std::string& path) {
  if (!v.is_array()) reject("expected a list of 2-form terms", path);
  FormField w(dim, 2);
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string tpath = path + "/" + std::to_string(t);
    require_keys(v[t], {"i", "j", "c"}, tpath);
    if (!v[t].contains("i") || !v[t].contains("j") || !v[t].contains("c"))
      reject("2-form term needs 'i', 'j', 'c'", tpath);
    const int i = require_int(v[t]["i"], tpath + "/i");
    const int j = require_int(v[t]["j"], tpath + "/j");
    if (i < 1 || i > dim || j < 1 || j > dim || i == j)
      reject("term indices must be distinct and within the ambient dimension", tpath);
    const double sign = i < j ? 1.0 : -1.0;
    w.add_term(MultiIndex{std::min(i, j), std::max(i, j)},
               Complex(sign, 0.0) * parse_expr_field(v[t]["c"], dim, tpath + "/c"));
  }
  return w;
}

FormField parse_theta(const json& v, int dim, const std::string& path) {
  if (!v.is_array()) reject("expected a list of 1-form terms", path);
  FormField w(dim, 1);
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string tpath = path + "/" + std::to_string(t);
    require_keys(v[t], {"i", "c"}, tpath);
    if (!v[t].contains("i") || !v[t].contains("c"))
      reject("1-form term needs 'i' and 'c'", tpath);
    const int i = require_int(v[t]["i"], tpath + "/i");
    if (i < 1 || i > dim) reject("term index out of range", tpath + "/i");
    w.add_term(MultiIndex{i}, parse_expr_field(v[t]["c"], dim, tpath + "/c"));
  }
  return w;
}

const std::set<std::string> kKnownChecks = {
    "identity", "criterio",   "nijenhuis", "pullback",  "pullback-identity",
    "spanning", "structure",  "stokes",    "taming",    "certificate",
    "table-audit", "s6-structure", "cp1-invariance", "pushforward", "nijenhuis-sweep"};

const std::set<std::string> kKnownTolerances = {"criterio", "pullback", "taming", "spanning",
                                                "structure", "stokes"};

}  // namespace

ScenarioConfig parse_config(const nlohmann::json& doc) {
  require_keys(doc,
               {"ambient_dim", "coframe", "f", "tau", "surface", "checks", "tolerances",
                "grid", "seeds", "omega", "theta"},
               "");
  if (!doc.contains("ambient_dim")) reject("missing required key 'ambient_dim'", "/ambient_dim");
  ScenarioConfig cfg;
  cfg.ambient_dim = require_int(doc["ambient_dim"], "/ambient_dim");
  if (cfg.ambient_dim < 2 || cfg.ambient_dim % 2 != 0 || cfg.ambient_dim > 16)
    reject("'ambient_dim' must be even, >= 2 and <= 16", "/ambient_dim");
  const int dim = cfg.ambient_dim;

  if (doc.contains("coframe")) cfg.coframe = parse_coframe(doc["coframe"], dim, "/coframe");

  if (doc.contains("f")) {
    require_keys(doc["f"], {"re", "im"}, "/f");
    if (!doc["f"].contains("re") || !doc["f"].contains("im"))
      reject("'f' needs 're' and 'im' expressions", "/f");
    cfg.f = parse_expr_field(doc["f"]["re"], dim, "/f/re") +
            Complex(0.0, 1.0) * parse_expr_field(doc["f"]["im"], dim, "/f/im");
  }

  if (doc.contains("tau")) {
    cfg.tau = parse_tau_spec(doc["tau"], "/tau");
    if (4 * cfg.tau->n != dim)
      reject("tau: ambient_dim must equal 4n for the J_Lambda construction", "/tau/n");
  }

  if (doc.contains("surface")) {
    const json& s = doc["surface"];
    if (s.is_string()) {
      if (s.get<std::string>() != "torus")
        reject("the only named surface is \"torus\"", "/surface");
      if (dim != 4) reject("the torus surface lives in ambient dimension 4", "/surface");
      cfg.surface = ParamSurface::torus4();
      cfg.surface_is_torus = true;
    } else {
      require_keys(s, {"x"}, "/surface");
      if (!s.contains("x")) reject("surface object needs 'x': a list of 2n expressions in (x1,x2) = (u,v)", "/surface");
      const json& xs = s["x"];
      if (!xs.is_array() || static_cast<int>(xs.size()) != dim)
        reject("surface 'x' must list exactly ambient_dim coordinate expressions", "/surface/x");
      std::vector<ScalarField> coords;
      for (int m = 0; m < dim; ++m)
        coords.push_back(parse_expr_field(xs[m], 2, "/surface/x/" + std::to_string(m)));
      cfg.surface = ParamSurface::from_fields(std::move(coords));
    }
  }

  if (doc.contains("checks")) {
    const json& cs = doc["checks"];
    if (!cs.is_array()) reject("'checks' must be an array of check names", "/checks");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string name = require_str(cs[i], "/checks/" + std::to_string(i));
      if (!kKnownChecks.count(name))
        reject("unknown check '" + name + "'", "/checks/" + std::to_string(i));
      cfg.checks.push_back(name);
    }
  }

  if (doc.contains("tolerances")) {
    const json& ts = doc["tolerances"];
    if (!ts.is_object()) reject("'tolerances' must be an object", "/tolerances");
    for (auto it = ts.begin(); it != ts.end(); ++it) {
      if (!kKnownTolerances.count(it.key()))
        reject("unknown tolerance '" + it.key() + "'", "/tolerances/" + it.key());
      cfg.tolerances[it.key()] = require_num(it.value(), "/tolerances/" + it.key());
    }
  }

  if (doc.contains("grid")) {
    cfg.grid = require_int(doc["grid"], "/grid");
    if (cfg.grid < 2 || cfg.grid > 512) reject("'grid' must be in 2..512", "/grid");
  }

  if (doc.contains("seeds")) {
    const json& ss = doc["seeds"];
    if (!ss.is_array()) reject("'seeds' must be an array of points", "/seeds");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string spath = "/seeds/" + std::to_string(i);
      if (!ss[i].is_array() || static_cast<int>(ss[i].size()) != dim)
        reject("seed must be a point of length ambient_dim", spath);
      Eigen::VectorXd p(dim);
      for (int k = 0; k < dim; ++k)
        p[k] = require_num(ss[i][k], spath + "/" + std::to_string(k));
      cfg.seeds.push_back(std::move(p));
    }
  }

  if (doc.contains("omega")) cfg.omega = parse_omega(doc["omega"], dim, "/omega");
  if (doc.contains("theta")) cfg.theta = parse_theta(doc["theta"], dim, "/theta");

  return cfg;
}

ScenarioConfig load_config(const std::string& path, std::string* raw_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", "/");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  if (raw_bytes) *raw_bytes = bytes;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what(), "/");
  }
  return parse_config(doc);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace acg
