#pragma once

#include <vector>

#include "acg/acs.hpp"

namespace acg {

/// Verdict vocabulary shared by all checks and reports.
enum class Verdict { Pass, Fail, Inconclusive, Refused };

const char* verdict_name(Verdict v);

/// A point numerically on Z_f = f^{-1}(0), with the residual |f(p)| and
/// the regularity margin (smallest singular value of the real 2 x 2n
/// Jacobian of (Re f, Im f)). Samples with margin <= 1e-6 are flagged
/// irregular and excluded from criterion checks.
struct ZeroSetSample {
  Eigen::VectorXd p;
  double residual = 0.0;
  double margin = 0.0;
  bool regular = false;
  int iterations = 0;
};

inline constexpr double kRegularityMargin = 1e-6;

/// Gauss-Newton projection p <- p - Df(p)^+ f(p) on the real Jacobian.
/// Throws ProjectionError on rank collapse or non-convergence.
ZeroSetSample project_to_zero_set(const ScalarField& f, Eigen::VectorXd seed,
                                  int max_iter = 50, double tol = 1e-12);

/// Make a sample from a point assumed to lie on Z_f (residual and margin
/// still measured, not trusted).
ZeroSetSample sample_at(const ScalarField& f, const Eigen::VectorXd& p);

/// The four computable conditions of the hypersurface criterion at one
/// sample, as scale-normalized defects:
///   c1  J-invariance defect of ker(df)      (condition i)
///   c3  off-(1,1) fraction of df wedge dfbar (condition iii)
///   c4  |df ^ dfbar ^ alpha_1 ^...^ alpha_n| (condition iv)
///   c5  |dbar f ^ conj(del f)|               (condition v)
struct CriterioRow {
  ZeroSetSample sample;
  double c1 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  bool equivalence_violation = false;  // mixed verdict across c1/c3/c4/c5
};

struct CriterioReport {
  std::vector<CriterioRow> rows;
  int excluded_irregular = 0;
  double tol = 1e-9;
  Verdict overall = Verdict::Inconclusive;
  int n_pass = 0, n_fail = 0, n_inconclusive = 0, n_violation = 0;
};

/// Evaluate all four defects at each regular sample. Decision band: a
/// sample passes when every defect is <= tol, fails when every defect is
/// >= 10 tol, and is inconclusive in between. Disagreement between the
/// four (some below tol, some above 10 tol) is flagged as an equivalence
/// violation -- the criterion says they vanish together.
CriterioReport criterio_check(const ScalarField& f, const Coframe& C,
                              const std::vector<ZeroSetSample>& samples, double tol = 1e-9);

/// The reference identity of the R^4 torus example, checked off the zero
/// set: returns the coefficient of df ^ dfbar ^ alpha_1 ^ alpha_2 in the
/// basis ordering dwbar ^ dzbar ^ dz ^ dw. The basis constant (-4 against
/// dx^{1,2,3,4}) is expanded once at first use and convention drift is a
/// hard failure.
Complex offset_identity_check(const ScalarField& f, const Coframe& C,
                              const Eigen::VectorXd& p);

/// Closed form 2i z w (1 - |zw|^2) of the same coefficient.
Complex torus_identity_reference(const Eigen::VectorXd& p);

}  // namespace acg
