#include "acg/surface.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace acg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ParamSurface::immersion_margin(int grid) const {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const SurfacePoint s = at(kTwoPi * i / grid, kTwoPi * j / grid);
      Eigen::MatrixXd jac(ambient_, 2);
      jac.col(0) = s.du;
      jac.col(1) = s.dv;
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
      margin = std::min(margin, svd.singularValues()(1));
    }
  }
  return margin;
}

double ParamSurface::periodicity_defect(int grid) const {
  double defect = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double t = kTwoPi * i / grid;
    if (periodic_u_)
      defect = std::max(defect, (at(0.0, t).pos - at(kTwoPi, t).pos).norm());
    if (periodic_v_)
      defect = std::max(defect, (at(t, 0.0).pos - at(t, kTwoPi).pos).norm());
  }
  return defect;
}

ParamSurface ParamSurface::torus4() {
  return ParamSurface(4, [](double u, double v) {
    SurfacePoint s;
    s.pos = Eigen::Vector4d(std::cos(u), std::sin(u), std::cos(v), std::sin(v));
    s.du = Eigen::Vector4d(-std::sin(u), std::cos(u), 0.0, 0.0);
    s.dv = Eigen::Vector4d(0.0, 0.0, -std::sin(v), std::cos(v));
    return s;
  });
}

ParamSurface ParamSurface::from_fields(std::vector<ScalarField> coords, bool periodic_u,
                                       bool periodic_v) {
  if (coords.empty()) throw std::invalid_argument("surface needs coordinate fields");
  for (const auto& f : coords)
    if (f.dim() != 2)
      throw std::invalid_argument("surface coordinate fields must have 2 parameters");
  const int ambient = static_cast<int>(coords.size());
  return ParamSurface(
      ambient,
      [coords = std::move(coords), ambient](double u, double v) {
        SurfacePoint s;
        s.pos.resize(ambient);
        s.du.resize(ambient);
        s.dv.resize(ambient);
        const Eigen::Vector2d p(u, v);
        for (int m = 0; m < ambient; ++m) {
          const Jet j = coords[m].eval(p);
          s.pos[m] = j.v.real();
          s.du[m] = j.g[0].real();
          s.dv[m] = j.g[1].real();
        }
        return s;
      },
      periodic_u, periodic_v);
}

AltTensor pullback(const FormField& F, const ParamSurface& S, double u, double v) {
  if (F.dim() != S.ambient())
    throw std::invalid_argument("pullback: form and surface ambient dimensions differ");
  const SurfacePoint s = S.at(u, v);
  const AltTensor a = F.eval(s.pos);
  switch (F.degree()) {
    case 0: {
      AltTensor out(2, 0);
      out.add(MultiIndex{}, a.apply({}));
      return out;
    }
    case 1: {
      AltTensor out(2, 1);
      out.add(MultiIndex{1}, a.apply({s.du}));
      out.add(MultiIndex{2}, a.apply({s.dv}));
      return out;
    }
    case 2: {
      AltTensor out(2, 2);
      out.add(MultiIndex{1, 2}, a.apply({s.du, s.dv}));
      return out;
    }
    default:
      return AltTensor(2, 2);  // rank > 2 pulls back to zero on a surface
  }
}

}  // namespace acg
