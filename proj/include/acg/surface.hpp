#pragma once

#include <functional>
#include <vector>

#include "acg/form_field.hpp"

namespace acg {

/// Position and first partials of a doubly periodic immersion
/// [0,2pi)^2 -> R^{2n} at one parameter value.
struct SurfacePoint {
  Eigen::VectorXd pos;
  Eigen::VectorXd du;
  Eigen::VectorXd dv;
};

/// Two-parameter surface used for sampling, pullback and quadrature.
class ParamSurface {
public:
  ParamSurface() = default;
  ParamSurface(int ambient, std::function<SurfacePoint(double, double)> fn,
               bool periodic_u = true, bool periodic_v = true)
      : ambient_(ambient), periodic_u_(periodic_u), periodic_v_(periodic_v),
        fn_(std::move(fn)) {}

  SurfacePoint at(double u, double v) const { return fn_(u, v); }
  int ambient() const { return ambient_; }
  bool periodic_u() const { return periodic_u_; }
  bool periodic_v() const { return periodic_v_; }

  /// Smallest second singular value of the Jacobian over an n x n grid
  /// (immersion margin).
  double immersion_margin(int grid = 16) const;

  /// Max endpoint mismatch |S(0,v)-S(2pi,v)| and |S(u,0)-S(u,2pi)|.
  double periodicity_defect(int grid = 16) const;

  /// The unit bicircle (cos u, sin u, cos v, sin v) in R^4.
  static ParamSurface torus4();

  /// Build from 2n coordinate fields over the two parameters
  /// (u = x1, v = x2 in the expression language).
  static ParamSurface from_fields(std::vector<ScalarField> coords,
                                  bool periodic_u = true, bool periodic_v = true);

private:
  int ambient_ = 0;
  bool periodic_u_ = true, periodic_v_ = true;
  std::function<SurfacePoint(double, double)> fn_;
};

/// Pullback of a form along a 2-parameter surface, evaluated at (u,v):
/// degree 1 -> coefficients on (du, dv); degree 2 -> single coefficient on
/// du wedge dv; degree 0 passes through; degree > 2 pulls back to zero.
AltTensor pullback(const FormField& F, const ParamSurface& S, double u, double v);

}  // namespace acg
