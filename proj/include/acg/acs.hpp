#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acg/form_field.hpp"

namespace acg {

/// n complex 1-form fields alpha_1..alpha_n on R^{2n} spanning, together
/// with their conjugates, the complexified cotangent space. Determines the
/// almost complex structure J pointwise.
struct Coframe {
  int dim = 0;  // 2n
  std::vector<FormField> alpha;
  std::string name;

  int n() const { return dim / 2; }
};

/// Pointwise data of the induced structure: the real matrix J with
/// J^2 = -I, the stacked coframe matrix M = [alpha; conj alpha] in the dx
/// basis, its inverse and condition number.
struct AcsPoint {
  Eigen::VectorXd p;
  Eigen::MatrixXd J;
  Eigen::MatrixXcd M;
  Eigen::MatrixXcd Minv;
  double cond = 0.0;
  double imag_residual = 0.0;  // max imaginary part discarded when realifying J
};

/// Condition-number cap on M beyond which a point is reported degenerate
/// rather than silently inverted.
inline constexpr double kCoframeConditionCap = 1e8;

/// Build J at p from the eigen-relation alpha_i(Jv) = i alpha_i(v):
/// J = Re(M^{-1} diag(i I_n, -i I_n) M). Throws DegenerateCoframeError when
/// cond(M) exceeds the cap.
AcsPoint j_at(const Coframe& C, const Eigen::VectorXd& p);

/// Exact partial derivatives dJ/dx_k via d(M^{-1}) = -M^{-1} dM M^{-1}.
std::vector<Eigen::MatrixXd> dj_at(const Coframe& C, const Eigen::VectorXd& p);

struct NijenhuisValue {
  Eigen::VectorXd p;
  int a = 0, b = 0;     // coordinate indices, 1-based
  Eigen::VectorXd value;  // N(e_a, e_b)
  double norm = 0.0;
};

/// Nijenhuis tensor on the constant coordinate fields e_a, e_b,
/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y], using exact derivatives
/// of J.
NijenhuisValue nijenhuis(const Coframe& C, const Eigen::VectorXd& p, int a, int b);

/// All pairs at once (shares the dJ computation); result[a][b] with
/// zero-based indexing, antisymmetric.
std::vector<std::vector<Eigen::VectorXd>> nijenhuis_all(const Coframe& C,
                                                        const Eigen::VectorXd& p);

/// A pointwise almost complex structure given directly as a matrix field;
/// used where no coframe exists (e.g. a pushed-forward structure).
using MatrixField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// J of a coframe as a matrix field.
MatrixField coframe_j_field(const Coframe& C);

/// Nijenhuis tensor of a matrix field with central finite differences for
/// dJ (step h). Independent of the exact-derivative path; doubles as its
/// oracle.
NijenhuisValue nijenhuis_fd(const MatrixField& J, const Eigen::VectorXd& p, int a, int b,
                            double h = 1e-5);

/// Project a degree-r tensor onto its (p,q) bidegree component with
/// respect to the coframe at the point.
AltTensor type_project(const Coframe& C, const Eigen::VectorXd& p, const AltTensor& a,
                       int p_deg, int q_deg);

/// The four bidegree components of (dF)(p) for a form F of pure bidegree
/// (p,q) at p: the splitting d = Abar + dbar + del + A lands them in
/// (p-1,q+2), (p,q+1), (p+1,q), (p+2,q-1) respectively.
struct DSplit {
  AltTensor abar_part;  // (p-1, q+2)
  AltTensor dbar_part;  // (p, q+1)
  AltTensor del_part;   // (p+1, q)
  AltTensor a_part;     // (p+2, q-1)
  int p_deg = 0, q_deg = 0;  // bidegree of F at the point
};

DSplit split_d(const Coframe& C, const FormField& F, const Eigen::VectorXd& p,
               double purity_tol = 1e-9);

/// The (0,1) part of df at p.
AltTensor dbar_scalar(const Coframe& C, const ScalarField& f, const Eigen::VectorXd& p);

/// The (1,0) part of df at p.
AltTensor del_scalar(const Coframe& C, const ScalarField& f, const Eigen::VectorXd& p);

/// Standard coframe {dz_1, ..., dz_n}: the integrable structure.
Coframe standard_coframe(int dim);

}  // namespace acg
