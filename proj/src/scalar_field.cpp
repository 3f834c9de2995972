#include "acg/scalar_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace acg {

namespace {
void check_same_dim(const ScalarField& a, const ScalarField& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("scalar field dimension mismatch");
}
}  // namespace

ScalarField ScalarField::constant(Complex c, int dim) {
  return ScalarField(dim, 2, [c, dim](const Eigen::VectorXd&) { return Jet::constant(c, dim); });
}

ScalarField ScalarField::coordinate(int k, int dim) {
  if (k < 1 || k > dim) throw std::invalid_argument("coordinate index out of range");
  return ScalarField(dim, 2, [k, dim](const Eigen::VectorXd& p) {
    return Jet::coordinate(p[k - 1], k - 1, dim);
  });
}

ScalarField ScalarField::from_expr(const Expr& e) {
  return ScalarField(e.dim, 2, [e](const Eigen::VectorXd& p) { return eval_jet(e, p); });
}

ScalarField ScalarField::from_expr(const std::string& text, int dim) {
  return from_expr(parse(text, dim));
}

ScalarField ScalarField::angle(int k, int dim) {
  if (2 * k > dim) throw std::invalid_argument("angle pair index out of range");
  const int ix = 2 * k - 2, iy = 2 * k - 1;
  return ScalarField(dim, 2, [ix, iy, dim, k](const Eigen::VectorXd& p) {
    const double x = p[ix], y = p[iy];
    const double r2 = x * x + y * y;
    if (r2 == 0.0)
      throw EvalError("angle undefined at the coordinate origin", "arg(z" + std::to_string(k) + ")");
    Jet j(dim);
    j.v = Complex(std::atan2(y, x), 0.0);
    const double r4 = r2 * r2;
    j.g[ix] = -y / r2;
    j.g[iy] = x / r2;
    j.h(ix, ix) = 2.0 * x * y / r4;
    j.h(iy, iy) = -2.0 * x * y / r4;
    j.h(ix, iy) = (y * y - x * x) / r4;
    j.h(iy, ix) = j.h(ix, iy);
    return j;
  });
}

ScalarField ScalarField::compose(const ScalarField& outer, std::vector<ScalarField> inner) {
  if (inner.empty()) throw std::invalid_argument("compose needs at least one inner field");
  if (static_cast<int>(inner.size()) != outer.dim())
    throw std::invalid_argument("compose: inner field count must match outer dimension");
  const int dim = inner.front().dim();
  for (const auto& g : inner)
    if (g.dim() != dim) throw std::invalid_argument("compose: inner dimension mismatch");
  const int m = outer.dim();
  int order = outer.jet_order();
  for (const auto& g : inner) order = std::min(order, g.jet_order());

  return ScalarField(dim, order, [outer, inner = std::move(inner), m, dim](const Eigen::VectorXd& p) {
    std::vector<Jet> gj;
    gj.reserve(inner.size());
    Eigen::VectorXd q(m);
    for (int i = 0; i < m; ++i) {
      gj.push_back(inner[i].eval(p));
      q[i] = gj.back().v.real();
    }
    const Jet oj = outer.eval(q);
    Jet r(dim);
    r.v = oj.v;
    for (int a = 0; a < m; ++a) {
      r.g += oj.g[a] * gj[a].g;
      r.h += oj.g[a] * gj[a].h;
      for (int b = 0; b < m; ++b)
        r.h += oj.h(a, b) * (gj[a].g * gj[b].g.transpose());
    }
    symmetrize(r.h);
    return r;
  });
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  check_same_dim(a, b);
  return ScalarField(a.dim_, std::min(a.order_, b.order_),
                     [a, b](const Eigen::VectorXd& p) { return a.eval(p) + b.eval(p); });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  check_same_dim(a, b);
  return ScalarField(a.dim_, std::min(a.order_, b.order_),
                     [a, b](const Eigen::VectorXd& p) { return a.eval(p) - b.eval(p); });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  check_same_dim(a, b);
  return ScalarField(a.dim_, std::min(a.order_, b.order_),
                     [a, b](const Eigen::VectorXd& p) { return a.eval(p) * b.eval(p); });
}

ScalarField operator*(Complex c, const ScalarField& a) {
  return ScalarField(a.dim_, a.order_,
                     [c, a](const Eigen::VectorXd& p) { return c * a.eval(p); });
}

ScalarField operator-(const ScalarField& a) {
  return ScalarField(a.dim_, a.order_, [a](const Eigen::VectorXd& p) { return -a.eval(p); });
}

ScalarField conj(const ScalarField& a) {
  return ScalarField(a.dim_, a.order_,
                     [a](const Eigen::VectorXd& p) { return jet_conj(a.eval(p)); });
}

ScalarField partial(const ScalarField& a, int k) {
  if (k < 1 || k > a.dim()) throw std::invalid_argument("partial: index out of range");
  if (a.jet_order() < 1)
    throw std::invalid_argument("partial: field carries no derivative information");
  const int dim = a.dim();
  return ScalarField(dim, a.order_ - 1, [a, k, dim](const Eigen::VectorXd& p) {
    const Jet j = a.eval(p);
    Jet r(dim);
    r.v = j.g[k - 1];
    r.g = j.h.row(k - 1).transpose();
    return r;
  });
}

}  // namespace acg
