#pragma once

#include "acg/config.hpp"
#include "acg/report.hpp"

namespace acg {

struct RunOptions {
  int grid = 16;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int points = 200;  // nijenhuis sweep size
};

/// The built-in end-to-end scenario: identity sweep, criterion on the unit
/// bicircle, Nijenhuis witnesses, pullback structure of the embedded torus,
/// taming certificate plus the standard-coframe control run.
Report run_verify_torus(const RunOptions& opt);

/// User f + coframe: project seeds (or surface grid points) onto Z_f and
/// evaluate the criterion defects.
Report run_criterio(const ScenarioConfig& cfg, const RunOptions& opt,
                    const std::string& config_hash);

/// TauSpec -> J_Lambda build, spanning sweep, pullback-identity
/// verification and structure sanity.
Report run_jlambda(const ScenarioConfig& cfg, const RunOptions& opt,
                   const std::string& config_hash);

/// Octonion table audit, S^6 structure checks, CP^1 invariance, pushforward.
Report run_octonion(const RunOptions& opt);

/// Taming margins, Stokes witness and certificate for a candidate form.
Report run_tame(const ScenarioConfig& cfg, const RunOptions& opt,
                const std::string& config_hash);

/// Nijenhuis sweep of a configured coframe over low-discrepancy points.
Report run_nijenhuis_sweep(const ScenarioConfig& cfg, const RunOptions& opt,
                           const std::string& config_hash);

}  // namespace acg
