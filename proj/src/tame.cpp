#include "acg/tame.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace acg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex quad_pass(const FormField& omega, const ParamSurface& S, int grid, double* abs_scale) {
  Complex sum(0.0, 0.0);
  double abs_sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const SurfacePoint sp = S.at(kTwoPi * i / grid, kTwoPi * j / grid);
      const Complex val = omega.eval(sp.pos).apply({sp.du, sp.dv});
      sum += val;
      abs_sum += std::abs(val);
    }
  }
  const double weight = (kTwoPi / grid) * (kTwoPi / grid);
  if (abs_scale) *abs_scale = abs_sum * weight;
  return sum * weight;
}

}  // namespace

QuadratureResult integrate_2form(const FormField& omega, const ParamSurface& S, int grid) {
  if (grid < 8) throw std::invalid_argument("quadrature grid must be at least 8");
  if (omega.degree() != 2) throw std::invalid_argument("integrate_2form expects a 2-form");
  QuadratureResult out;
  out.grid = grid;
  out.value = quad_pass(omega, S, grid, nullptr);
  out.value_refined = quad_pass(omega, S, 2 * grid, nullptr);
  out.error_estimate = std::abs(out.value - out.value_refined);
  return out;
}

StokesReport stokes_witness(const FormField& theta, const ParamSurface& S, int grid) {
  if (theta.degree() != 1) throw std::invalid_argument("stokes_witness expects a 1-form");
  StokesReport out;
  out.grid = grid;
  const FormField dtheta = theta.d();
  out.integral = quad_pass(dtheta, S, grid, &out.scale);
  out.normalized = std::abs(out.integral) / std::max(out.scale, 1.0);
  return out;
}

TamingReport taming_margin(const FormField& omega, const Coframe& C, const ParamSurface& S,
                           int grid) {
  if (omega.degree() != 2) throw std::invalid_argument("taming_margin expects a 2-form");
  TamingReport rep;
  rep.margin_min = std::numeric_limits<double>::infinity();
  rep.margin_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const SurfacePoint sp = S.at(kTwoPi * i / grid, kTwoPi * j / grid);
      const Eigen::MatrixXd J = j_at(C, sp.pos).J;
      Eigen::VectorXd t1 = sp.du.normalized();
      Eigen::VectorXd t2 = sp.dv - sp.dv.dot(t1) * t1;
      t2.normalize();
      const AltTensor w = omega.eval(sp.pos);
      auto omega_of = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
        const Complex val = w.apply({x, y});
        rep.max_imag = std::max(rep.max_imag, std::abs(val.imag()));
        return val.real();
      };
      const Eigen::VectorXd jt1 = J * t1;
      const Eigen::VectorXd jt2 = J * t2;
      for (const Eigen::VectorXd* jt : {&jt1, &jt2}) {
        const Eigen::VectorXd proj = jt->dot(t1) * t1 + jt->dot(t2) * t2;
        rep.max_tangent_defect =
            std::max(rep.max_tangent_defect, (*jt - proj).norm() / jt->norm());
      }
      const double g11 = omega_of(t1, jt1);
      const double g22 = omega_of(t2, jt2);
      const double g12 = 0.5 * (omega_of(t1, jt2) + omega_of(t2, jt1));
      const double tr = 0.5 * (g11 + g22);
      const double disc = std::sqrt(0.25 * (g11 - g22) * (g11 - g22) + g12 * g12);
      const double lambda_min = tr - disc;
      rep.margins.push_back(lambda_min);
      rep.margin_min = std::min(rep.margin_min, lambda_min);
      rep.margin_max = std::max(rep.margin_max, lambda_min);
    }
  }
  rep.invariant_planes = rep.max_tangent_defect <= 1e-6;
  const QuadratureResult q = integrate_2form(omega, S, grid < 8 ? 8 : grid);
  rep.integral = q.value;
  rep.integral_error = q.error_estimate;
  std::ostringstream os;
  if (rep.margin_min > 0.0)
    os << "omega tames J along the surface at every sample (min margin " << rep.margin_min
       << ")";
  else
    os << "omega fails to tame J along the surface (min margin " << rep.margin_min << ")";
  if (!rep.invariant_planes)
    os << "; warning: tangent planes are not J-invariant (defect " << rep.max_tangent_defect
       << "), margins refer to the ambient taming condition only";
  rep.verdict_text = os.str();
  return rep;
}

namespace {

double dtheta_matches_omega(const FormField& theta, const FormField& omega, int probes) {
  const FormField dtheta = theta.d();
  std::mt19937_64 gen(12345);
  auto uniform = [&](double lo, double hi) {
    const double u = std::ldexp(double(gen() >> 11), -53);
    return lo + (hi - lo) * u;
  };
  double worst = 0.0;
  for (int t = 0; t < probes; ++t) {
    Eigen::VectorXd p(omega.dim());
    for (int i = 0; i < p.size(); ++i) p[i] = uniform(-2.0, 2.0);
    const AltTensor a = dtheta.eval(p);
    const AltTensor b = omega.eval(p);
    const double scale = std::max(1.0, b.norm());
    worst = std::max(worst, (a - b).norm() / scale);
  }
  return worst;
}

}  // namespace

Certificate non_tameability_certificate(const Coframe& C, const ParamSurface& S,
                                        const FormField& omega, const FormField* theta,
                                        int grid) {
  Certificate cert;
  const TamingReport rep = taming_margin(omega, C, S, grid);
  cert.invariance_defect = rep.max_tangent_defect;
  cert.integral = rep.integral;
  cert.margin_min = rep.margin_min;
  cert.margin_max = rep.margin_max;
  cert.theta_given = theta != nullptr;

  if (rep.max_tangent_defect > 1e-9) {
    cert.refused = true;
    std::ostringstream os;
    os << "surface is not pseudo-holomorphic for the coframe (tangent J-invariance defect "
       << rep.max_tangent_defect << " > 1e-9); certificate refused";
    cert.refusal_reason = os.str();
    cert.verdict = Verdict::Refused;
    return cert;
  }

  if (theta) {
    cert.theta_verified = dtheta_matches_omega(*theta, omega, 100) <= 1e-9;
    if (!cert.theta_verified) {
      cert.refused = true;
      cert.refusal_reason = "supplied primitive fails d(theta) = omega; certificate refused";
      cert.verdict = Verdict::Refused;
      return cert;
    }
  }

  std::ostringstream clause;
  if (cert.theta_verified) {
    clause << "(a) omega = d(theta) verified at 100 probe points; the surface is closed, so "
              "int_S omega = "
           << std::abs(cert.integral) << " (Stokes: exact forms integrate to zero)";
    cert.clauses.push_back(clause.str());
  }
  cert.clauses.push_back(
      "(b) if omega tamed J along S, the taming margin would be positive everywhere and "
      "int_S omega would be strictly positive");
  std::ostringstream c3;
  c3 << "(c) computed: min margin " << cert.margin_min << ", max margin " << cert.margin_max
     << ", int_S omega = " << std::abs(cert.integral);
  cert.clauses.push_back(c3.str());

  const bool integral_zero = std::abs(cert.integral) <= 1e-10;
  const bool margin_zero = std::abs(cert.margin_min) <= 1e-12 && std::abs(cert.margin_max) <= 1e-12;
  const bool margin_nonpositive = cert.margin_min <= 1e-12;

  if (cert.theta_verified && integral_zero && margin_zero) {
    cert.conclusion =
        "int_S omega = 0 and margin == 0: omega does not tame J along S; any exact taming "
        "form is impossible by (a)+(b).";
    cert.verdict = Verdict::Pass;
  } else if (margin_nonpositive) {
    std::ostringstream os;
    os << "taming fails along S: the margin reaches " << cert.margin_min << " <= 0";
    if (cert.theta_verified && integral_zero)
      os << "; moreover int_S omega = 0 while taming would force a positive integral";
    os << ".";
    cert.conclusion = os.str();
    cert.verdict = Verdict::Pass;
  } else if (cert.theta_verified && integral_zero) {
    cert.conclusion =
        "int_S omega = 0 while all sampled margins are positive: sampled taming is "
        "inconsistent with exactness; refine the grid.";
    cert.verdict = Verdict::Inconclusive;
  } else {
    cert.conclusion =
        "no contradiction witnessed for this candidate along this surface: margins are "
        "positive at every sample and the integral is nonzero or unverified.";
    cert.verdict = Verdict::Inconclusive;
  }
  return cert;
}

FormField standard_omega(int dim) {
  FormField w(dim, 2);
  for (int k = 1; 2 * k <= dim; ++k)
    w.add_term(MultiIndex{2 * k - 1, 2 * k}, ScalarField::constant(Complex(1.0, 0.0), dim));
  return w;
}

FormField standard_theta(int dim) {
  FormField t(dim, 1);
  for (int k = 1; 2 * k <= dim; ++k) {
    t.add_term(MultiIndex{2 * k}, Complex(0.5, 0.0) * ScalarField::coordinate(2 * k - 1, dim));
    t.add_term(MultiIndex{2 * k - 1},
               Complex(-0.5, 0.0) * ScalarField::coordinate(2 * k, dim));
  }
  return t;
}

}  // namespace acg
