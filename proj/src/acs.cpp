#include "acg/acs.hpp"

#include <sstream>

#include "acg/errors.hpp"

namespace acg {

namespace {

// Coframe rows and their x_k-derivatives at a point, all from one jet
// evaluation per coefficient.
struct CoframeJets {
  Eigen::MatrixXcd M;                 // 2n x 2n, rows [alpha; conj alpha]
  std::vector<Eigen::MatrixXcd> dM;   // dM/dx_k
};

CoframeJets coframe_jets(const Coframe& C, const Eigen::VectorXd& p, bool with_derivatives) {
  const int d = C.dim;
  const int n = C.n();
  CoframeJets out;
  out.M = Eigen::MatrixXcd::Zero(d, d);
  if (with_derivatives) out.dM.assign(d, Eigen::MatrixXcd::Zero(d, d));
  for (int i = 0; i < n; ++i) {
    for (const auto& [mask, f] : C.alpha[i].terms()) {
      const int col = MultiIndex(mask).indices()[0] - 1;
      const Jet j = f.eval(p);
      out.M(i, col) += j.v;
      out.M(n + i, col) += std::conj(j.v);
      if (with_derivatives) {
        for (int k = 0; k < d; ++k) {
          out.dM[k](i, col) += j.g[k];
          out.dM[k](n + i, col) += std::conj(j.g[k]);
        }
      }
    }
  }
  return out;
}

void check_condition(const Coframe& C, const Eigen::VectorXd& p, double cond) {
  if (!(cond <= kCoframeConditionCap)) {
    std::ostringstream os;
    os << "coframe";
    if (!C.name.empty()) os << " '" << C.name << "'";
    os << " degenerate at point (";
    for (int i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "): spanning matrix condition number " << cond;
    throw DegenerateCoframeError(os.str(), cond);
  }
}

Eigen::MatrixXcd structure_diagonal(int n) {
  Eigen::VectorXcd diag(2 * n);
  diag.head(n).setConstant(Complex(0.0, 1.0));
  diag.tail(n).setConstant(Complex(0.0, -1.0));
  return diag.asDiagonal();
}

AcsPoint make_acs_point(const Coframe& C, const Eigen::VectorXd& p, const Eigen::MatrixXcd& M) {
  AcsPoint out;
  out.p = p;
  out.M = M;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  out.cond = sv(0) / sv(sv.size() - 1);
  check_condition(C, p, out.cond);
  out.Minv = M.partialPivLu().inverse();
  const Eigen::MatrixXcd Jc = out.Minv * structure_diagonal(C.n()) * M;
  out.J = Jc.real();
  out.imag_residual = Jc.imag().cwiseAbs().maxCoeff();
  return out;
}

}  // namespace

AcsPoint j_at(const Coframe& C, const Eigen::VectorXd& p) {
  if (p.size() != C.dim) throw std::invalid_argument("j_at: point dimension mismatch");
  return make_acs_point(C, p, coframe_jets(C, p, false).M);
}

std::vector<Eigen::MatrixXd> dj_at(const Coframe& C, const Eigen::VectorXd& p) {
  const CoframeJets jets = coframe_jets(C, p, true);
  const AcsPoint at = make_acs_point(C, p, jets.M);
  const Eigen::MatrixXcd D = structure_diagonal(C.n());
  std::vector<Eigen::MatrixXd> out;
  out.reserve(C.dim);
  for (int k = 0; k < C.dim; ++k) {
    const Eigen::MatrixXcd dMinv = -at.Minv * jets.dM[k] * at.Minv;
    out.push_back((dMinv * D * jets.M + at.Minv * D * jets.dM[k]).real());
  }
  return out;
}

namespace {

// N(e_a, e_b) from J and its partials; [e_a, e_b] = 0 for coordinate
// fields, the remaining brackets reduce to directional derivatives of J.
Eigen::VectorXd assemble_nijenhuis(const Eigen::MatrixXd& J,
                                   const std::vector<Eigen::MatrixXd>& dJ, int a, int b) {
  const int d = J.rows();
  const Eigen::VectorXd Ja = J.col(a);
  const Eigen::VectorXd Jb = J.col(b);
  Eigen::VectorXd lie_JaJb = Eigen::VectorXd::Zero(d);
  for (int k = 0; k < d; ++k) lie_JaJb += dJ[k].col(b) * Ja[k] - dJ[k].col(a) * Jb[k];
  const Eigen::VectorXd lie_Ja_eb = -dJ[b].col(a);  // [J e_a, e_b]
  const Eigen::VectorXd lie_ea_Jb = dJ[a].col(b);   // [e_a, J e_b]
  return lie_JaJb - J * lie_Ja_eb - J * lie_ea_Jb;
}

}  // namespace

NijenhuisValue nijenhuis(const Coframe& C, const Eigen::VectorXd& p, int a, int b) {
  if (a < 1 || a > C.dim || b < 1 || b > C.dim)
    throw std::invalid_argument("nijenhuis: coordinate index out of range");
  const AcsPoint at = j_at(C, p);
  const auto dJ = dj_at(C, p);
  NijenhuisValue out;
  out.p = p;
  out.a = a;
  out.b = b;
  out.value = assemble_nijenhuis(at.J, dJ, a - 1, b - 1);
  out.norm = out.value.norm();
  return out;
}

std::vector<std::vector<Eigen::VectorXd>> nijenhuis_all(const Coframe& C,
                                                        const Eigen::VectorXd& p) {
  const AcsPoint at = j_at(C, p);
  const auto dJ = dj_at(C, p);
  const int d = C.dim;
  std::vector<std::vector<Eigen::VectorXd>> out(d, std::vector<Eigen::VectorXd>(d));
  for (int a = 0; a < d; ++a) {
    out[a][a] = Eigen::VectorXd::Zero(d);
    for (int b = a + 1; b < d; ++b) {
      out[a][b] = assemble_nijenhuis(at.J, dJ, a, b);
      out[b][a] = -out[a][b];
    }
  }
  return out;
}

MatrixField coframe_j_field(const Coframe& C) {
  return [C](const Eigen::VectorXd& p) { return j_at(C, p).J; };
}

NijenhuisValue nijenhuis_fd(const MatrixField& J, const Eigen::VectorXd& p, int a, int b,
                            double h) {
  const Eigen::MatrixXd J0 = J(p);
  const int d = J0.rows();
  std::vector<Eigen::MatrixXd> dJ(d);
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd pp = p, pm = p;
    pp[k] += h;
    pm[k] -= h;
    dJ[k] = (J(pp) - J(pm)) / (2.0 * h);
  }
  NijenhuisValue out;
  out.p = p;
  out.a = a;
  out.b = b;
  out.value = assemble_nijenhuis(J0, dJ, a - 1, b - 1);
  out.norm = out.value.norm();
  return out;
}

namespace {

std::vector<std::uint32_t> masks_of_degree(int dim, int r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << dim); ++m)
    if (std::popcount(m) == r) out.push_back(m);
  return out;
}

// Coframe rows as degree-1 tensors: gamma_1..gamma_n = alpha,
// gamma_{n+1}..gamma_{2n} = conj alpha.
std::vector<AltTensor> gamma_rows(const Coframe& C, const Eigen::MatrixXcd& M) {
  const int d = C.dim;
  std::vector<AltTensor> rows;
  rows.reserve(d);
  for (int i = 0; i < d; ++i) {
    AltTensor t(d, 1);
    for (int k = 0; k < d; ++k) t.add(MultiIndex{k + 1}, M(i, k));
    rows.push_back(std::move(t));
  }
  return rows;
}

}  // namespace

AltTensor type_project(const Coframe& C, const Eigen::VectorXd& p, const AltTensor& a,
                       int p_deg, int q_deg) {
  const int r = a.degree();
  if (p_deg < 0 || q_deg < 0 || p_deg + q_deg != r)
    throw std::invalid_argument("type_project: bidegree must be nonnegative and sum to degree");
  if (a.dim() != C.dim) throw std::invalid_argument("type_project: dimension mismatch");
  if (r == 0) return (p_deg == 0 && q_deg == 0) ? a : AltTensor(a.dim(), 0);

  const AcsPoint at = j_at(C, p);
  const auto rows = gamma_rows(C, at.M);
  const auto masks = masks_of_degree(C.dim, r);
  const int m = static_cast<int>(masks.size());
  std::map<std::uint32_t, int> mask_pos;
  for (int i = 0; i < m; ++i) mask_pos[masks[i]] = i;

  // Column j: the dx-basis coefficients of gamma^{K_j}.
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(m, m);
  const int n = C.n();
  std::vector<int> holo_degree(m, 0);
  for (int j = 0; j < m; ++j) {
    AltTensor w(C.dim, 0);
    w.add(MultiIndex{}, Complex(1.0, 0.0));
    int holo = 0;
    for (int g = 1; g <= C.dim; ++g) {
      if (!(masks[j] & (1u << (g - 1)))) continue;
      w = w.wedge(rows[g - 1]);
      if (g <= n) ++holo;
    }
    holo_degree[j] = holo;
    for (const auto& [mask, coeff] : w.terms()) B(mask_pos.at(mask), j) = coeff;
  }

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(m);
  for (const auto& [mask, coeff] : a.terms()) rhs[mask_pos.at(mask)] = coeff;
  Eigen::VectorXcd gamma_coeffs = B.partialPivLu().solve(rhs);

  for (int j = 0; j < m; ++j)
    if (holo_degree[j] != p_deg) gamma_coeffs[j] = Complex(0.0, 0.0);
  const Eigen::VectorXcd back = B * gamma_coeffs;

  AltTensor out(C.dim, r);
  for (int i = 0; i < m; ++i)
    if (back[i] != Complex(0.0, 0.0)) out.add(MultiIndex(masks[i]), back[i]);
  return out;
}

DSplit split_d(const Coframe& C, const FormField& F, const Eigen::VectorXd& p,
               double purity_tol) {
  const int r = F.degree();
  const AltTensor at_p = F.eval(p);
  // Determine the (single) bidegree of F at p.
  int p_deg = -1;
  const double scale = at_p.norm();
  if (scale > 0.0) {
    double best = -1.0;
    for (int pd = 0; pd <= r; ++pd) {
      const double nn = type_project(C, p, at_p, pd, r - pd).norm();
      if (nn > best) {
        best = nn;
        p_deg = pd;
      }
    }
    double off = 0.0;
    for (int pd = 0; pd <= r; ++pd) {
      if (pd == p_deg) continue;
      off += type_project(C, p, at_p, pd, r - pd).norm();
    }
    if (off > purity_tol * scale)
      throw std::invalid_argument("split_d: form is not of pure bidegree at the point");
  } else {
    p_deg = r;  // zero form: bidegree immaterial
  }
  const int q_deg = r - p_deg;

  const AltTensor df = F.d().eval(p);
  auto part = [&](int pd, int qd) {
    if (pd < 0 || qd < 0 || pd + qd != r + 1 || pd > C.dim || qd > C.dim)
      return AltTensor(C.dim, r + 1);
    return type_project(C, p, df, pd, qd);
  };
  DSplit out{part(p_deg - 1, q_deg + 2), part(p_deg, q_deg + 1), part(p_deg + 1, q_deg),
             part(p_deg + 2, q_deg - 1), p_deg, q_deg};
  return out;
}

AltTensor dbar_scalar(const Coframe& C, const ScalarField& f, const Eigen::VectorXd& p) {
  const AltTensor df = FormField::scalar(f).d().eval(p);
  return type_project(C, p, df, 0, 1);
}

AltTensor del_scalar(const Coframe& C, const ScalarField& f, const Eigen::VectorXd& p) {
  const AltTensor df = FormField::scalar(f).d().eval(p);
  return type_project(C, p, df, 1, 0);
}

Coframe standard_coframe(int dim) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("dimension must be even and >= 2");
  Coframe C;
  C.dim = dim;
  C.name = "standard";
  for (int k = 1; k <= dim / 2; ++k) C.alpha.push_back(FormField::dz(k, dim));
  return C;
}

}  // namespace acg
