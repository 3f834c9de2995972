#pragma once

#include <optional>
#include <string>

#include "acg/hypersurf.hpp"
#include "acg/surface.hpp"

namespace acg {

/// Periodic-trapezoid (equal weight) tensor quadrature of a 2-form over a
/// closed parameter torus. Spectrally accurate for smooth periodic
/// integrands; the N and 2N values are both reported as a self-check.
struct QuadratureResult {
  Complex value;
  Complex value_refined;  // at 2N
  double error_estimate;  // |value - value_refined|
  int grid = 0;
};

QuadratureResult integrate_2form(const FormField& omega, const ParamSurface& S, int grid);

/// Integral of d(theta) over the closed surface, normalized by the
/// integral of |dtheta(du, dv)|; Stokes makes the contract <= 1e-8.
struct StokesReport {
  Complex integral;
  double scale = 0.0;       // integral of the absolute pulled-back density
  double normalized = 0.0;  // |integral| / max(scale, 1)
  int grid = 0;
};

StokesReport stokes_witness(const FormField& theta, const ParamSurface& S, int grid = 64);

/// Taming margins of omega against the structure of C along S: at each
/// grid point the smallest eigenvalue of the symmetrized form
/// G(a,b) = (omega(t_a, J t_b) + omega(t_b, J t_a)) / 2 on an
/// orthonormalized tangent basis.
struct TamingReport {
  bool theta_given = false;
  bool theta_verified = false;
  double dtheta_defect = 0.0;  // max relative |dtheta - omega| over probe points
  Complex integral;
  double integral_error = 0.0;
  double margin_min = 0.0;
  double margin_max = 0.0;
  double max_imag = 0.0;            // imaginary residue of omega on real vectors
  double max_tangent_defect = 0.0;  // J-invariance defect of tangent planes
  bool invariant_planes = false;    // defect <= 1e-6
  std::vector<double> margins;      // row-major over the grid
  std::string verdict_text;
};

TamingReport taming_margin(const FormField& omega, const Coframe& C, const ParamSurface& S,
                           int grid);

/// Logical certificate for one candidate form: computed facts assembled
/// into clauses that falsify taming of J by omega along S, or a refusal
/// when the preconditions fail. Never emits partial claims.
struct Certificate {
  bool refused = false;
  std::string refusal_reason;
  std::vector<std::string> clauses;
  std::string conclusion;
  Complex integral;
  double margin_min = 0.0;
  double margin_max = 0.0;
  bool theta_given = false;
  bool theta_verified = false;
  double invariance_defect = 0.0;
  Verdict verdict = Verdict::Refused;
};

Certificate non_tameability_certificate(const Coframe& C, const ParamSurface& S,
                                        const FormField& omega, const FormField* theta,
                                        int grid = 64);

/// The standard symplectic form sum dx_{2k-1} ^ dx_{2k} and its primitive
/// (1/2) sum (x_{2k-1} dx_{2k} - x_{2k} dx_{2k-1}).
FormField standard_omega(int dim);
FormField standard_theta(int dim);

}  // namespace acg
