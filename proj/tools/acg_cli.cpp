// Command-line driver: scenario selection, config ingestion, report
// emission. Exit codes: 0 all verdicts pass, 1 any fail, 2 inconclusive
// or refused present (none fail), 3 config/schema error, 4 numerical
// abort (degeneracy / non-convergence).
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "acg/scenarios.hpp"
#include "acg/version.hpp"

namespace {

struct CliCommon {
  std::string out;
  std::string config;
  int grid = 16;
  double tol = 1e-9;
  bool json = false;
  int points = 200;
};

int emit(const acg::Report& rep, const CliCommon& c) {
  std::string body;
  if (c.json) {
    body = acg::report_to_json(rep).dump(2);
    body += '\n';
  } else {
    body = acg::human_summary(rep, c.out.empty());
  }
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write report to '" << c.out << "'\n";
      return 3;
    }
    f << body;
  }
  return acg::exit_code_for(rep);
}

void add_common(CLI::App* cmd, CliCommon& c, bool wants_config) {
  cmd->add_option("--out", c.out, "report path (default stdout)");
  cmd->add_option("--grid", c.grid, "sample grid size")->check(CLI::Range(2, 512));
  cmd->add_option("--tol", c.tol, "defect tolerance");
  cmd->add_flag("--json", c.json, "machine-readable report");
  if (wants_config)
    cmd->add_option("--config", c.config, "scenario config file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(acg::kToolName) + " " + acg::kVersion +
               " -- almost complex structures, pseudo-holomorphic hypersurface "
               "criteria and taming certificates on R^{2n}"};
  app.require_subcommand(1);

  CliCommon c;
  auto* cmd_verify = app.add_subcommand("verify-torus", "built-in end-to-end example");
  add_common(cmd_verify, c, false);
  auto* cmd_criterio = app.add_subcommand("criterio", "hypersurface criterion for user f + coframe");
  add_common(cmd_criterio, c, true);
  auto* cmd_jlambda = app.add_subcommand("jlambda", "build J_Lambda from tau and verify the pullback identity");
  add_common(cmd_jlambda, c, true);
  auto* cmd_oct = app.add_subcommand("octonion", "octonion table audit, S^6, CP^1, pushforward");
  add_common(cmd_oct, c, false);
  auto* cmd_tame = app.add_subcommand("tame", "taming margins and certificate for a candidate form");
  add_common(cmd_tame, c, true);
  auto* cmd_nij = app.add_subcommand("nijenhuis", "Nijenhuis sweep of a configured coframe");
  add_common(cmd_nij, c, true);
  cmd_nij->add_option("--points", c.points, "number of sweep points")->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  acg::RunOptions opt;
  opt.grid = c.grid;
  opt.tol = c.tol;
  opt.points = c.points;

  try {
    acg::Report rep;
    if (cmd_verify->parsed()) {
      rep = acg::run_verify_torus(opt);
    } else if (cmd_oct->parsed()) {
      rep = acg::run_octonion(opt);
    } else {
      std::string raw;
      const acg::ScenarioConfig cfg = acg::load_config(c.config, &raw);
      const std::string hash = acg::fnv1a_hex(raw);
      if (cmd_criterio->parsed())
        rep = acg::run_criterio(cfg, opt, hash);
      else if (cmd_jlambda->parsed())
        rep = acg::run_jlambda(cfg, opt, hash);
      else if (cmd_tame->parsed())
        rep = acg::run_tame(cfg, opt, hash);
      else
        rep = acg::run_nijenhuis_sweep(cfg, opt, hash);
    }
    return emit(rep, c);
  } catch (const acg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const acg::ParseError& e) {
    std::cerr << "expression error: " << e.what() << " (byte " << e.offset() << ", expected "
              << e.expected() << ")\n";
    return 3;
  } catch (const acg::DegenerateCoframeError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return 4;
  } catch (const acg::ProjectionError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return 4;
  } catch (const acg::EvalError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
