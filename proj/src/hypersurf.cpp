#include "acg/hypersurf.hpp"

#include "acg/errors.hpp"

namespace acg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Refused: return "refused";
  }
  return "?";
}

namespace {

// Real 2 x 2n Jacobian of (Re f, Im f) from the complex gradient.
Eigen::MatrixXd real_jacobian(const Jet& j) {
  const int d = j.dim();
  Eigen::MatrixXd df(2, d);
  for (int k = 0; k < d; ++k) {
    df(0, k) = j.g[k].real();
    df(1, k) = j.g[k].imag();
  }
  return df;
}

}  // namespace

ZeroSetSample sample_at(const ScalarField& f, const Eigen::VectorXd& p) {
  const Jet j = f.eval(p);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_jacobian(j));
  ZeroSetSample s;
  s.p = p;
  s.residual = std::abs(j.v);
  s.margin = svd.singularValues()(1);
  s.regular = s.margin > kRegularityMargin;
  return s;
}

ZeroSetSample project_to_zero_set(const ScalarField& f, Eigen::VectorXd seed, int max_iter,
                                  double tol) {
  std::vector<double> trace;
  Eigen::VectorXd p = std::move(seed);
  for (int it = 0; it < max_iter; ++it) {
    const Jet j = f.eval(p);
    const double r = std::abs(j.v);
    trace.push_back(r);
    const Eigen::MatrixXd df = real_jacobian(j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(df, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues()(1);
    if (r <= tol) {
      ZeroSetSample s;
      s.p = p;
      s.residual = r;
      s.margin = smin;
      s.regular = smin > kRegularityMargin;
      s.iterations = it;
      return s;
    }
    if (smin <= 1e-12 * svd.singularValues()(0) || smin == 0.0)
      throw ProjectionError("zero-set projection: Jacobian rank < 2 at iterate", trace);
    const Eigen::Vector2d rhs(j.v.real(), j.v.imag());
    p -= svd.solve(rhs);
  }
  throw ProjectionError("zero-set projection did not converge", trace);
}

namespace {

double c1_invariance_defect(const Eigen::MatrixXd& df, const Eigen::MatrixXd& J) {
  const int d = df.cols();
  // Kernel of df via full SVD: right singular vectors beyond the first two.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(df, Eigen::ComputeFullV);
  const Eigen::MatrixXd K = svd.matrixV().rightCols(d - 2);
  const Eigen::MatrixXd proj = K * K.transpose();
  const Eigen::MatrixXd jk = J * proj;
  const Eigen::MatrixXd outside = (Eigen::MatrixXd::Identity(d, d) - proj) * jk;
  const double scale = jk.norm();
  return scale == 0.0 ? 0.0 : outside.norm() / scale;
}

}  // namespace

CriterioReport criterio_check(const ScalarField& f, const Coframe& C,
                              const std::vector<ZeroSetSample>& samples, double tol) {
  CriterioReport rep;
  rep.tol = tol;
  const FormField df_field = FormField::scalar(f).d();
  FormField alpha_wedge = C.alpha[0];
  for (std::size_t i = 1; i < C.alpha.size(); ++i)
    alpha_wedge = alpha_wedge.wedge(C.alpha[i]);

  for (const auto& s : samples) {
    if (!s.regular) {
      ++rep.excluded_irregular;
      continue;
    }
    CriterioRow row;
    row.sample = s;
    const Jet j = f.eval(s.p);
    const Eigen::MatrixXd df_real = real_jacobian(j);
    const AcsPoint at = j_at(C, s.p);
    row.c1 = c1_invariance_defect(df_real, at.J);

    const AltTensor df = df_field.eval(s.p);
    const AltTensor dfbar = conj(df);
    const AltTensor w = df.wedge(dfbar);
    const double wnorm = w.norm();
    if (wnorm > 0.0) {
      const AltTensor w20 = type_project(C, s.p, w, 2, 0);
      const AltTensor w02 = type_project(C, s.p, w, 0, 2);
      row.c3 = (w20.norm() + w02.norm()) / wnorm;
    }

    const AltTensor alphas = alpha_wedge.eval(s.p);
    const AltTensor chain = w.wedge(alphas);
    const double chain_scale = wnorm * alphas.norm();
    row.c4 = chain_scale == 0.0 ? 0.0 : chain.norm() / chain_scale;

    const AltTensor dbar_f = type_project(C, s.p, df, 0, 1);
    const AltTensor del_f = type_project(C, s.p, df, 1, 0);
    const double df_scale = df.norm() * df.norm();
    row.c5 = df_scale == 0.0 ? 0.0 : dbar_f.wedge(conj(del_f)).norm() / df_scale;

    const double cmax = std::max({row.c1, row.c3, row.c4, row.c5});
    const double cmin = std::min({row.c1, row.c3, row.c4, row.c5});
    if (cmax <= tol)
      row.verdict = Verdict::Pass;
    else if (cmin >= 10.0 * tol)
      row.verdict = Verdict::Fail;
    else {
      row.verdict = Verdict::Inconclusive;
      row.equivalence_violation = cmin <= tol && cmax >= 10.0 * tol;
    }
    switch (row.verdict) {
      case Verdict::Pass: ++rep.n_pass; break;
      case Verdict::Fail: ++rep.n_fail; break;
      default: ++rep.n_inconclusive; break;
    }
    if (row.equivalence_violation) ++rep.n_violation;
    rep.rows.push_back(std::move(row));
  }

  if (rep.n_fail > 0)
    rep.overall = Verdict::Fail;
  else if (rep.n_inconclusive > 0)
    rep.overall = Verdict::Inconclusive;
  else if (rep.n_pass > 0)
    rep.overall = Verdict::Pass;
  return rep;
}

namespace {

// dwbar ^ dzbar ^ dz ^ dw as a multiple of dx^{1,2,3,4}; evaluated once.
Complex paper_basis_constant() {
  static const Complex s = [] {
    const Eigen::VectorXd origin = Eigen::VectorXd::Zero(4);
    const AltTensor dz = FormField::dz(1, 4).eval(origin);
    const AltTensor dw = FormField::dz(2, 4).eval(origin);
    const AltTensor prod = conj(dw).wedge(conj(dz)).wedge(dz).wedge(dw);
    const Complex c = prod.coeff(MultiIndex{1, 2, 3, 4});
    if (std::abs(c - Complex(-4.0, 0.0)) > 1e-14)
      throw std::logic_error("basis convention drift: dwbar^dzbar^dz^dw != -4 dx^{1,2,3,4}");
    return c;
  }();
  return s;
}

}  // namespace

Complex offset_identity_check(const ScalarField& f, const Coframe& C,
                              const Eigen::VectorXd& p) {
  if (C.dim != 4 || p.size() != 4)
    throw std::invalid_argument("identity check is specific to the R^4 torus example");
  const AltTensor df = FormField::scalar(f).d().eval(p);
  const AltTensor chain = df.wedge(conj(df)).wedge(C.alpha[0].eval(p)).wedge(C.alpha[1].eval(p));
  return chain.coeff(MultiIndex{1, 2, 3, 4}) / paper_basis_constant();
}

Complex torus_identity_reference(const Eigen::VectorXd& p) {
  const Complex z(p[0], p[1]);
  const Complex w(p[2], p[3]);
  const Complex zw = z * w;
  return Complex(0.0, 2.0) * zw * (1.0 - std::norm(zw));
}

}  // namespace acg
