#include "acg/constructions.hpp"

#include <cmath>
#include <numbers>

#include "acg/errors.hpp"

namespace acg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Coframe torus_coframe() {
  const int d = 4;
  Coframe C;
  C.dim = d;
  C.name = "torus";
  FormField a1 = FormField::dz(1, d);
  a1 += FormField::dzbar(2, d).smul(ScalarField::from_expr("-I*z1*z2", d));
  FormField a2 = FormField::dz(2, d);
  a2 += FormField::dzbar(1, d).smul(ScalarField::from_expr("I*z1*z2", d));
  C.alpha = {std::move(a1), std::move(a2)};
  return C;
}

ParamSurface torus_embedding() { return ParamSurface::torus4(); }

ScalarField torus_f() {
  return ScalarField::from_expr("abs2(z1)-1", 4) +
         Complex(0.0, 1.0) * ScalarField::from_expr("abs2(z2)-1", 4);
}

TauSpec TauSpec::identity(int n) {
  TauSpec t;
  t.n = n;
  t.tau.assign(n, std::vector<std::string>(n, "0"));
  t.taubar.assign(n, std::vector<std::string>(n, "0"));
  for (int i = 0; i < n; ++i) t.tau[i][i] = "1";
  return t;
}

TauFields parse_tau(const TauSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("tau: n must be >= 1");
  if (static_cast<int>(spec.tau.size()) != spec.n ||
      static_cast<int>(spec.taubar.size()) != spec.n)
    throw std::invalid_argument("tau: coefficient matrices must be n x n");
  TauFields out;
  out.n = spec.n;
  const int dim = 2 * spec.n;  // angle space
  out.tau.resize(spec.n);
  out.taubar.resize(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    if (static_cast<int>(spec.tau[i].size()) != spec.n ||
        static_cast<int>(spec.taubar[i].size()) != spec.n)
      throw std::invalid_argument("tau: coefficient matrices must be n x n");
    for (int j = 0; j < spec.n; ++j) {
      out.tau[i].push_back(ScalarField::from_expr(spec.tau[i][j], dim));
      out.taubar[i].push_back(ScalarField::from_expr(spec.taubar[i][j], dim));
    }
  }
  return out;
}

Eigen::VectorXcd zeta_components(const TauFields& t, int i, const Eigen::VectorXd& theta) {
  Eigen::VectorXcd out(2 * t.n);
  for (int j = 0; j < t.n; ++j) {
    const Complex tij = t.tau[i][j].value(theta);
    const Complex tijb = t.taubar[i][j].value(theta);
    out[2 * j] = tij + tijb;                          // du_j
    out[2 * j + 1] = Complex(0, 1) * (tij - tijb);    // dv_j
  }
  return out;
}

double tau_spanning_condition(const TauFields& t, const Eigen::VectorXd& theta) {
  const int n = t.n;
  Eigen::MatrixXcd Z(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex tij = t.tau[i][j].value(theta);
      const Complex tijb = t.taubar[i][j].value(theta);
      Z(i, j) = tij;
      Z(i, n + j) = tijb;
      Z(n + i, j) = std::conj(tijb);
      Z(n + i, n + j) = std::conj(tij);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Z);
  const auto& sv = svd.singularValues();
  return sv(0) / sv(sv.size() - 1);
}

Coframe base_coframe_4n(int n) {
  const int d = 4 * n;
  Coframe C;
  C.dim = d;
  C.name = "base-4n";
  std::vector<FormField> alphas, betas;
  for (int k = 1; k <= n; ++k) {
    const int zi = 2 * k - 1;  // complex index of Z_k
    const int wi = 2 * k;      // complex index of W_k
    const std::string zs = "z" + std::to_string(zi);
    const std::string ws = "z" + std::to_string(wi);
    FormField a = FormField::dz(zi, d);
    a += FormField::dzbar(wi, d).smul(ScalarField::from_expr("-I*" + zs + "*" + ws, d));
    a = a.smul(ScalarField::from_expr("1/(I*" + zs + ")", d));
    FormField b = FormField::dz(wi, d);
    b += FormField::dzbar(zi, d).smul(ScalarField::from_expr("I*" + zs + "*" + ws, d));
    b = b.smul(ScalarField::from_expr("1/" + ws, d));
    alphas.push_back(std::move(a));
    betas.push_back(std::move(b));
  }
  C.alpha = std::move(alphas);
  for (auto& b : betas) C.alpha.push_back(std::move(b));
  return C;
}

Coframe build_j_lambda(const TauSpec& spec) {
  const TauFields t = parse_tau(spec);
  const int n = spec.n;
  const int d = 4 * n;
  const Coframe base = base_coframe_4n(n);

  // Angle map R^{4n} -> angle space R^{2n}: (arg Z_k, arg W_k).
  std::vector<ScalarField> angles;
  for (int k = 1; k <= n; ++k) {
    angles.push_back(ScalarField::angle(2 * k - 1, d));
    angles.push_back(ScalarField::angle(2 * k, d));
  }
  auto extend = [&](const ScalarField& tau_field) {
    return ScalarField::compose(tau_field, angles);
  };

  Coframe C;
  C.dim = d;
  C.name = "J_Lambda";
  std::vector<FormField> alpha_tau, beta_tau;
  for (int i = 0; i < n; ++i) {
    FormField a(d, 1), b(d, 1);
    for (int k = 0; k < n; ++k) {
      const ScalarField tik = extend(t.tau[i][k]);
      const ScalarField tikb = extend(t.taubar[i][k]);
      a += base.alpha[k].smul(tik);
      a += conj(base.alpha[n + k]).smul(tikb);
      b += base.alpha[n + k].smul(tik);
      b += conj(base.alpha[k]).smul(tikb);
    }
    alpha_tau.push_back(std::move(a));
    beta_tau.push_back(std::move(b));
  }
  C.alpha = std::move(alpha_tau);
  for (auto& b : beta_tau) C.alpha.push_back(std::move(b));
  return C;
}

Eigen::VectorXd ProductTorus::embed(const Eigen::VectorXd& angles) const {
  Eigen::VectorXd p(4 * n);
  for (int k = 0; k < n; ++k) {
    const double u = angles[2 * k], v = angles[2 * k + 1];
    p[4 * k + 0] = std::cos(u);
    p[4 * k + 1] = std::sin(u);
    p[4 * k + 2] = std::cos(v);
    p[4 * k + 3] = std::sin(v);
  }
  return p;
}

Eigen::MatrixXd ProductTorus::jacobian(const Eigen::VectorXd& angles) const {
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(4 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double u = angles[2 * k], v = angles[2 * k + 1];
    jac(4 * k + 0, 2 * k) = -std::sin(u);
    jac(4 * k + 1, 2 * k) = std::cos(u);
    jac(4 * k + 2, 2 * k + 1) = -std::sin(v);
    jac(4 * k + 3, 2 * k + 1) = std::cos(v);
  }
  return jac;
}

Eigen::VectorXcd pullback_product_torus(const FormField& omega, const ProductTorus& T,
                                        const Eigen::VectorXd& angles) {
  if (omega.degree() != 1)
    throw std::invalid_argument("product-torus pullback expects a 1-form");
  const Eigen::VectorXd p = T.embed(angles);
  const AltTensor w = omega.eval(p);
  const Eigen::MatrixXd jac = T.jacobian(angles);
  Eigen::VectorXcd out(2 * T.n);
  for (int c = 0; c < 2 * T.n; ++c) out[c] = w.apply({jac.col(c)});
  return out;
}

// --- octonionic S^6 -------------------------------------------------------

Eigen::VectorXd s6_acs(const Eigen::VectorXd& p, const Eigen::VectorXd& v) {
  if (p.size() != 7 || v.size() != 7)
    throw std::invalid_argument("s6_acs expects 7-component imaginary octonions");
  constexpr double tol = 1e-9;
  if (std::abs(p.norm() - 1.0) > tol)
    throw std::invalid_argument("s6_acs: base point must lie on the unit sphere");
  if (std::abs(p.dot(v)) > tol * std::max(1.0, v.norm()))
    throw std::invalid_argument("s6_acs: vector must be tangent (orthogonal to the point)");
  const Octonion prod = octonion_mul(Octonion::imaginary(p), Octonion::imaginary(v));
  return prod.imag();
}

std::vector<Eigen::VectorXd> sphere_samples(const std::array<int, 3>& axes, int count) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double y = 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
    const double phi = golden * i;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(7);
    p[axes[0] - 1] = r * std::cos(phi);
    p[axes[1] - 1] = y;
    p[axes[2] - 1] = r * std::sin(phi);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Orthonormal tangent basis of the 2-sphere cut by the 3-plane at p.
std::pair<Eigen::VectorXd, Eigen::VectorXd> sphere_tangent_basis(
    const std::array<int, 3>& axes, const Eigen::VectorXd& p) {
  Eigen::Vector3d q(p[axes[0] - 1], p[axes[1] - 1], p[axes[2] - 1]);
  int pivot = 0;
  q.cwiseAbs().minCoeff(&pivot);
  Eigen::Vector3d helper = Eigen::Vector3d::Zero();
  helper[pivot] = 1.0;
  Eigen::Vector3d t1 = q.cross(helper).normalized();
  Eigen::Vector3d t2 = q.cross(t1).normalized();
  Eigen::VectorXd T1 = Eigen::VectorXd::Zero(7), T2 = Eigen::VectorXd::Zero(7);
  for (int i = 0; i < 3; ++i) {
    T1[axes[i] - 1] = t1[i];
    T2[axes[i] - 1] = t2[i];
  }
  return {T1, T2};
}

double invariance_defect_at(const Eigen::VectorXd& p, const Eigen::VectorXd& t1,
                            const Eigen::VectorXd& t2) {
  double defect = 0.0;
  for (const Eigen::VectorXd* t : {&t1, &t2}) {
    const Eigen::VectorXd jt = s6_acs(p, *t);
    const Eigen::VectorXd proj = jt.dot(t1) * t1 + jt.dot(t2) * t2;
    defect = std::max(defect, (jt - proj).norm() / jt.norm());
  }
  return defect;
}

}  // namespace

double plane_invariance_defect(const std::array<int, 3>& axes, int samples) {
  double defect = 0.0;
  for (const auto& p : sphere_samples(axes, samples)) {
    const auto [t1, t2] = sphere_tangent_basis(axes, p);
    defect = std::max(defect, invariance_defect_at(p, t1, t2));
  }
  return defect;
}

StereographicStructure::StereographicStructure(int pole_axis) : pole_axis_(pole_axis) {
  if (pole_axis < 1 || pole_axis > 7)
    throw std::invalid_argument("pole axis must be an imaginary unit index in 1..7");
  for (int i = 1; i <= 7; ++i)
    if (i != pole_axis) axes_.push_back(i);
}

Eigen::VectorXd StereographicStructure::lift(const Eigen::VectorXd& q) const {
  const double s = q.squaredNorm() + 1.0;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(7);
  p[pole_axis_ - 1] = (q.squaredNorm() - 1.0) / s;
  for (int i = 0; i < 6; ++i) p[axes_[i] - 1] = 2.0 * q[i] / s;
  return p;
}

Eigen::VectorXd StereographicStructure::project(const Eigen::VectorXd& p7) const {
  const double a = p7[pole_axis_ - 1];
  if (1.0 - a < 1e-12)
    throw std::invalid_argument("stereographic projection undefined at the pole");
  Eigen::VectorXd q(6);
  for (int i = 0; i < 6; ++i) q[i] = p7[axes_[i] - 1] / (1.0 - a);
  return q;
}

Eigen::MatrixXd StereographicStructure::lift_jacobian(const Eigen::VectorXd& q) const {
  const double s = q.squaredNorm() + 1.0;
  const Eigen::VectorXd p = lift(q);
  Eigen::MatrixXd L(7, 6);
  for (int i = 0; i < 6; ++i) {
    Eigen::VectorXd col = Eigen::VectorXd::Zero(7);
    col[pole_axis_ - 1] = 2.0 * q[i] / s;
    col[axes_[i] - 1] += 2.0 / s;
    col -= p * (2.0 * q[i] / s);
    L.col(i) = col;
  }
  return L;
}

Eigen::VectorXd StereographicStructure::push_tangent(const Eigen::VectorXd& p7,
                                                     const Eigen::VectorXd& w7) const {
  const double a = p7[pole_axis_ - 1];
  const double wa = w7[pole_axis_ - 1];
  Eigen::VectorXd axis = Eigen::VectorXd::Zero(7);
  axis[pole_axis_ - 1] = 1.0;
  const Eigen::VectorXd num = (w7 - wa * axis) / (1.0 - a) +
                              (p7 - a * axis) * (wa / ((1.0 - a) * (1.0 - a)));
  Eigen::VectorXd out(6);
  for (int i = 0; i < 6; ++i) out[i] = num[axes_[i] - 1];
  return out;
}

Eigen::MatrixXd StereographicStructure::j_prime(const Eigen::VectorXd& q) const {
  if (q.size() != 6) throw std::invalid_argument("j_prime expects a point of R^6");
  if (q.norm() > 1e3)
    throw std::invalid_argument("query too close to the pole image (norm guard)");
  const Eigen::VectorXd p = lift(q);
  const Eigen::MatrixXd L = lift_jacobian(q);
  Eigen::MatrixXd out(6, 6);
  for (int i = 0; i < 6; ++i) {
    const Eigen::VectorXd w = s6_acs(p, L.col(i));
    out.col(i) = push_tangent(p, w);
  }
  return out;
}

MatrixField StereographicStructure::as_matrix_field() const {
  return [copy = *this](const Eigen::VectorXd& q) { return copy.j_prime(q); };
}

double StereographicStructure::pushed_sphere_invariance_defect(int samples) const {
  const std::array<int, 3> cp1_axes{1, 2, 3};
  double defect = 0.0;
  for (const auto& p : sphere_samples(cp1_axes, samples)) {
    const auto [t1, t2] = sphere_tangent_basis(cp1_axes, p);
    const Eigen::VectorXd q = project(p);
    const Eigen::MatrixXd Jq = j_prime(q);
    Eigen::VectorXd s1 = push_tangent(p, t1), s2 = push_tangent(p, t2);
    // Orthonormalize the pushed tangent plane.
    s1.normalize();
    s2 -= s2.dot(s1) * s1;
    s2.normalize();
    for (const Eigen::VectorXd* t : {&s1, &s2}) {
      const Eigen::VectorXd jt = Jq * (*t);
      const Eigen::VectorXd proj = jt.dot(s1) * s1 + jt.dot(s2) * s2;
      defect = std::max(defect, (jt - proj).norm() / jt.norm());
    }
  }
  return defect;
}

// --- quaternionic frame experiment ---------------------------------------

Eigen::Matrix4d quat_j1() {
  Eigen::Matrix4d j;
  j << 0, -1, 0, 0,
       1, 0, 0, 0,
       0, 0, 0, -1,
       0, 0, 1, 0;
  return j;
}

Eigen::Matrix4d quat_j2() {
  Eigen::Matrix4d j;
  j << 0, 1, 0, 0,
       -1, 0, 0, 0,
       0, 0, 0, 1,
       0, 0, -1, 0;
  return j;
}

Eigen::Matrix4d conjugating_frame(const Eigen::Matrix4d& J) {
  // v1: coordinate vector giving the best-conditioned pair (v1, J v1).
  int best = 0;
  double best_area = -1.0;
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4d v = Eigen::Vector4d::Unit(k);
    const Eigen::Vector4d jv = J * v;
    const double area = (jv - jv.dot(v) * v).norm();
    if (area > best_area + 1e-12) {
      best_area = area;
      best = k;
    }
  }
  // Deterministic preference for e1 unless it is actually degenerate.
  const Eigen::Vector4d e1 = Eigen::Vector4d::Unit(0);
  Eigen::Vector4d v1 = ((J * e1) - (J * e1).dot(e1) * e1).norm() > 1e-8
                           ? e1
                           : Eigen::Vector4d::Unit(best);
  const Eigen::Vector4d v2 = J * v1;

  // Largest-norm Gram-Schmidt complement among the remaining basis vectors.
  Eigen::Vector4d q1 = v1.normalized();
  Eigen::Vector4d q2 = v2 - v2.dot(q1) * q1;
  q2.normalize();
  Eigen::Vector4d v3 = Eigen::Vector4d::Zero();
  double best_res = -1.0;
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4d e = Eigen::Vector4d::Unit(k);
    const Eigen::Vector4d res = e - e.dot(q1) * q1 - e.dot(q2) * q2;
    if (res.norm() > best_res + 1e-12) {
      best_res = res.norm();
      v3 = res;
    }
  }
  const Eigen::Vector4d v4 = J * v3;
  Eigen::Matrix4d A;
  A.col(0) = v1;
  A.col(1) = v2;
  A.col(2) = v3;
  A.col(3) = v4;
  return A;
}

FrameExperimentReport quaternion_frame_experiment(
    const Coframe& C, const ParamSurface& S,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& normal_field, int grid) {
  if (C.dim != 4 || S.ambient() != 4)
    throw std::invalid_argument("frame experiment is specific to R^4");
  FrameExperimentReport rep;
  rep.min_w_norm = std::numeric_limits<double>::infinity();
  const Eigen::Matrix4d J1 = quat_j1();
  const Eigen::Matrix4d J2 = quat_j2();
  Eigen::Matrix4d prevA;
  bool have_prev = false;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      FrameSample row;
      row.u = kTwoPi * i / grid;
      row.v = kTwoPi * j / grid;
      const SurfacePoint sp = S.at(row.u, row.v);
      row.p = sp.pos;
      const Eigen::Matrix4d J = j_at(C, sp.pos).J;
      const Eigen::Matrix4d A = conjugating_frame(J);
      row.A = A;
      if (std::abs(A.determinant()) < 1e-10) {
        row.degenerate = true;
        ++rep.degenerate_count;
        rep.samples.push_back(std::move(row));
        continue;
      }
      const Eigen::Matrix4d Ainv = A.inverse();
      row.conjugacy_error = (J - A * J1 * Ainv).norm();

      // Orthonormal tangent basis from the immersion.
      Eigen::Vector4d t1 = sp.du.normalized();
      Eigen::Vector4d t2 = sp.dv - sp.dv.dot(t1) * t1;
      t2.normalize();
      auto tangential = [&](const Eigen::Vector4d& x) {
        return (x.dot(t1) * t1 + x.dot(t2) * t2).eval();
      };

      const Eigen::Vector4d V = normal_field(sp.pos);
      row.normality_defect = V.norm() == 0.0 ? 1.0 : tangential(V).norm() / V.norm();
      row.w = A * J2 * Ainv * V;
      row.w_norm = row.w.norm();
      row.tangency_defect =
          row.w_norm == 0.0 ? 1.0 : (row.w - Eigen::Vector4d(tangential(row.w))).norm() / row.w_norm;

      rep.max_conjugacy_error = std::max(rep.max_conjugacy_error, row.conjugacy_error);
      rep.min_w_norm = std::min(rep.min_w_norm, row.w_norm);
      rep.max_tangency_defect = std::max(rep.max_tangency_defect, row.tangency_defect);
      if (have_prev) rep.max_frame_step = std::max(rep.max_frame_step, (A - prevA).norm());
      prevA = A;
      have_prev = true;
      rep.samples.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace acg
