#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "acg/expr.hpp"
#include "acg/jet.hpp"

namespace acg {

/// A complex-valued function of a point of R^{2n}, evaluable to a
/// second-order jet. Immutable and pure: same point, same jet.
///
/// `jet_order` says how many derivative levels of the jet are trustworthy:
/// 2 for fields built from expressions, one less per applied `partial`
/// (differentiating consumes one stored level; the missing Hessian of a
/// derivative field is returned as zeros).
class ScalarField {
public:
  ScalarField() = default;

  Jet eval(const Eigen::VectorXd& p) const { return (*fn_)(p); }
  Complex value(const Eigen::VectorXd& p) const { return eval(p).v; }

  int dim() const { return dim_; }
  int jet_order() const { return order_; }
  bool valid() const { return static_cast<bool>(fn_); }

  static ScalarField constant(Complex c, int dim);
  static ScalarField coordinate(int k, int dim);  // x_k, 1-based
  static ScalarField from_expr(const Expr& e);
  static ScalarField from_expr(const std::string& text, int dim);

  /// atan2(x_{2k}, x_{2k-1}): the angle of the k-th complex coordinate.
  /// Evaluation at the coordinate origin of that pair is an EvalError.
  static ScalarField angle(int k, int dim);

  /// outer(inner_1(p), ..., inner_m(p)) with the full second-order chain
  /// rule. Inner fields must be real-valued (their imaginary parts are
  /// dropped when forming the outer evaluation point).
  static ScalarField compose(const ScalarField& outer, std::vector<ScalarField> inner);

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(Complex c, const ScalarField& a);
  friend ScalarField operator-(const ScalarField& a);
  friend ScalarField conj(const ScalarField& a);

  /// d/dx_k (1-based). Drops one jet order.
  friend ScalarField partial(const ScalarField& a, int k);

private:
  using Fn = std::function<Jet(const Eigen::VectorXd&)>;
  ScalarField(int dim, int order, Fn fn)
      : dim_(dim), order_(order), fn_(std::make_shared<Fn>(std::move(fn))) {}

  int dim_ = 0;
  int order_ = 2;
  std::shared_ptr<const Fn> fn_;
};

}  // namespace acg
