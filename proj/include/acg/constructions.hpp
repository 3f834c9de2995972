#pragma once

#include <optional>

#include "acg/acs.hpp"
#include "acg/octonion.hpp"
#include "acg/surface.hpp"

namespace acg {

/// The non-integrable structure on R^4 given by
///   alpha_1 = dz - I z w dwbar,  alpha_2 = dw + I z w dzbar
/// with z = z_1, w = z_2.
Coframe torus_coframe();

/// The unit bicircle (cos u, sin u, cos v, sin v); the zero set of
/// torus_f and a pseudo-holomorphic surface for torus_coframe.
ParamSurface torus_embedding();

/// f(z,w) = (|z|^2 - 1) + i (|w|^2 - 1).
ScalarField torus_f();

/// Coefficient matrices tau_ij, tau_ijbar of a torus structure
///   zeta_i = sum_j tau_ij dz_j + sum_j tau_ijbar dzbar_j
/// given as expression texts over the 2n angle variables
/// (x_{2j-1}, x_{2j}) = (u_j, v_j), 2pi-periodic. Angles live in [0,2pi),
/// lattice 2pi Z^{2n}.
struct TauSpec {
  int n = 0;
  std::vector<std::vector<std::string>> tau;     // n x n
  std::vector<std::vector<std::string>> taubar;  // n x n

  static TauSpec identity(int n);
};

/// Parsed tau coefficients as fields over angle space R^{2n}.
struct TauFields {
  int n = 0;
  std::vector<std::vector<ScalarField>> tau, taubar;
};

TauFields parse_tau(const TauSpec& spec);

/// zeta_i components at angles theta: coefficient of du_j is
/// tau_ij + tau_ijbar, of dv_j is i(tau_ij - tau_ijbar).
Eigen::VectorXcd zeta_components(const TauFields& t, int i, const Eigen::VectorXd& theta);

/// Condition number of the spanning matrix [[tau, taubar],[conj taubar,
/// conj tau]] at angles theta; the zeta's define an almost complex
/// structure iff this is finite.
double tau_spanning_condition(const TauFields& t, const Eigen::VectorXd& theta);

/// The local (1,0)-coframe {alpha_k, beta_k} on R^{4n} normalized so the
/// product-torus pullback of either is dz_k = du_k + i dv_k:
///   alpha_k = (1/(i Z_k)) (dZ_k - i Z_k W_k dWbar_k)
///   beta_k  = (1/W_k)     (dW_k + i Z_k W_k dZbar_k)
/// with factor coordinates Z_k = z_{2k-1}, W_k = z_{2k}. Defined where
/// all Z_k, W_k != 0; evaluation elsewhere raises a domain error.
Coframe base_coframe_4n(int n);

/// J_Lambda: the coframe {alpha_i^tau, beta_i^tau} on R^{4n} with
///   alpha_i^tau = sum_k tau_ik alpha_k + sum_k tau_ikbar conj(beta_k)
///   beta_i^tau  = sum_k tau_ik beta_k  + sum_k tau_ikbar conj(alpha_k)
/// where the tau maps are extended from the torus by the angle map
/// (Z_k, W_k) -> (arg Z_k, arg W_k).
Coframe build_j_lambda(const TauSpec& spec);

/// The product torus T^{2n} -> R^{4n}, factor k mapping the angles
/// (u_k, v_k) to (cos u_k, sin u_k, cos v_k, sin v_k).
struct ProductTorus {
  int n = 1;

  Eigen::VectorXd embed(const Eigen::VectorXd& angles) const;        // R^{2n} -> R^{4n}
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& angles) const;     // 4n x 2n
};

/// Components of the pullback i^*(omega) of a 1-form field on R^{4n}
/// along the product torus, in the (du_1, dv_1, ..., du_n, dv_n) basis.
Eigen::VectorXcd pullback_product_torus(const FormField& omega, const ProductTorus& T,
                                        const Eigen::VectorXd& angles);

// --- octonionic S^6 -------------------------------------------------------

/// J_p v = p * v for p a unit imaginary octonion and v an imaginary
/// tangent vector at p (<v, p> = 0); both given by components on e1..e7.
/// Preconditions checked to 1e-9.
Eigen::VectorXd s6_acs(const Eigen::VectorXd& p, const Eigen::VectorXd& v);

/// Deterministic Fibonacci-sphere samples of the unit sphere of
/// span(e_{axes[0]}, e_{axes[1]}, e_{axes[2]}) in Im O.
std::vector<Eigen::VectorXd> sphere_samples(const std::array<int, 3>& axes, int count);

/// Max J-invariance defect of the tangent planes of S^6 cut by the
/// 3-plane span(e_{axes}); ~0 for the quaternion plane {1,2,3}, order one
/// for a control plane like {1,2,4}.
double plane_invariance_defect(const std::array<int, 3>& axes, int samples);

/// The structure pushed to R^6 by stereographic projection from `pole`
/// (an imaginary axis index, default 4, outside the CP^1 plane
/// span(e1,e2,e3)). Works in coordinates on the hyperplane orthogonal to
/// the pole axis.
class StereographicStructure {
public:
  explicit StereographicStructure(int pole_axis = 4);

  int pole_axis() const { return pole_axis_; }

  /// R^6 -> S^6 minus the pole (inverse stereographic projection).
  Eigen::VectorXd lift(const Eigen::VectorXd& q) const;  // 7 components
  /// S^6 minus the pole -> R^6.
  Eigen::VectorXd project(const Eigen::VectorXd& p7) const;

  /// The pushed-forward structure J'(q) = Dpi . J . Dpi^{-1} as a real
  /// 6 x 6 matrix. Norm guard: |q| > 1e3 (too close to the pole image at
  /// infinity) is an error.
  Eigen::MatrixXd j_prime(const Eigen::VectorXd& q) const;

  MatrixField as_matrix_field() const;

  /// Tangent of the pushed CP^1 sphere at the image of a sample, and its
  /// J'-invariance defect.
  double pushed_sphere_invariance_defect(int samples) const;

private:
  Eigen::MatrixXd lift_jacobian(const Eigen::VectorXd& q) const;            // 7 x 6
  Eigen::VectorXd push_tangent(const Eigen::VectorXd& p7,
                               const Eigen::VectorXd& w7) const;            // Dpi_p(w)

  int pole_axis_;
  std::vector<int> axes_;  // the six imaginary axes != pole
};

// --- quaternionic frame experiment ---------------------------------------

/// The reference pair for the conjugation experiment: J1 is the standard
/// structure of the fixed coordinate convention (J1 e1 = e2, J1 e3 = e4),
/// J2 the companion matrix used to rotate a normal field into a candidate
/// tangent field.
Eigen::Matrix4d quat_j1();
Eigen::Matrix4d quat_j2();

/// Build A with J = A J1 A^{-1} by the deterministic column recipe:
/// v1 = e1 (largest-norm fallback), v2 = J v1, v3 = largest-norm
/// Gram-Schmidt complement of span{v1, v2} among the coordinate basis,
/// v4 = J v3; A = [v1 v2 v3 v4].
Eigen::Matrix4d conjugating_frame(const Eigen::Matrix4d& J);

struct FrameSample {
  double u = 0.0, v = 0.0;
  Eigen::VectorXd p;
  double conjugacy_error = 0.0;   // |J - A J1 A^{-1}|
  double normality_defect = 0.0;  // |Pi_T V| / |V|
  Eigen::VectorXd w;              // A J2 A^{-1} V
  double w_norm = 0.0;
  double tangency_defect = 0.0;   // |(I - Pi_T) W| / |W|
  bool degenerate = false;
  Eigen::Matrix4d A;
};

struct FrameExperimentReport {
  std::vector<FrameSample> samples;
  double max_conjugacy_error = 0.0;
  double min_w_norm = 0.0;
  double max_tangency_defect = 0.0;
  double max_frame_step = 0.0;  // continuity of A along the sample grid
  int degenerate_count = 0;
};

/// Sweep the experiment over a grid x grid sample of the surface with a
/// user normal field V (default for the torus: grad Re f = 2(x1,x2,0,0)).
/// Tangency is reported, never asserted.
FrameExperimentReport quaternion_frame_experiment(
    const Coframe& C, const ParamSurface& S,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& normal_field, int grid = 16);

}  // namespace acg
