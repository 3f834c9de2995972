#include "acg/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "acg/sampling.hpp"

namespace acg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

OrderedJson cnum(Complex z) { return OrderedJson{{"re", z.real()}, {"im", z.imag()}}; }

OrderedJson point_json(const Eigen::VectorXd& p) {
  OrderedJson a = OrderedJson::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p[i]);
  return a;
}

Verdict pass_fail(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

// An empty selection means "all checks of the subcommand".
bool wants(const ScenarioConfig& cfg, const std::string& name) {
  if (cfg.checks.empty()) return true;
  for (const auto& c : cfg.checks)
    if (c == name) return true;
  return false;
}

// Structure sanity block shared by several scenarios: J real, J^2 = -I and
// the eigen-relation residual |M J - D M| / |M| at sampled points.
CheckBlock structure_block(const Coframe& C, const std::vector<Eigen::VectorXd>& points,
                           double tol) {
  CheckBlock blk;
  blk.name = "structure";
  blk.inputs = {{"coframe", C.name}, {"points", points.size()}};
  double max_imag = 0.0, max_sq = 0.0, max_eigen = 0.0, max_cond = 0.0;
  int degenerate = 0;
  const int n = C.n();
  Eigen::VectorXcd diag(C.dim);
  diag.head(n).setConstant(Complex(0, 1));
  diag.tail(n).setConstant(Complex(0, -1));
  for (const auto& p : points) {
    try {
      const AcsPoint at = j_at(C, p);
      max_imag = std::max(max_imag, at.imag_residual);
      max_sq = std::max(max_sq,
                        (at.J * at.J + Eigen::MatrixXd::Identity(C.dim, C.dim)).norm());
      const Eigen::MatrixXcd lhs = at.M * at.J.cast<Complex>();
      const Eigen::MatrixXcd rhs = diag.asDiagonal() * at.M;
      max_eigen = std::max(max_eigen, (lhs - rhs).norm() / at.M.norm());
      max_cond = std::max(max_cond, at.cond);
    } catch (const DegenerateCoframeError&) {
      ++degenerate;
    }
  }
  blk.summary = {{"max_imag_residual", max_imag},
                 {"max_j_square_defect", max_sq},
                 {"max_eigen_relation_defect", max_eigen},
                 {"max_condition", max_cond},
                 {"degenerate_points", degenerate}};
  blk.verdict = pass_fail(max_imag <= 1e-10 && max_sq <= 1e-10 && max_eigen <= 1e-10 &&
                          degenerate == 0);
  return blk;
}

CheckBlock criterio_block(const ScalarField& f, const Coframe& C,
                          const std::vector<ZeroSetSample>& samples, double tol) {
  CheckBlock blk;
  blk.name = "criterio";
  blk.inputs = {{"samples", samples.size()}, {"tol", tol}};
  const CriterioReport rep = criterio_check(f, C, samples, tol);
  for (const auto& row : rep.rows) {
    blk.samples.push_back(OrderedJson{{"p", point_json(row.sample.p)},
                                      {"residual", row.sample.residual},
                                      {"margin", row.sample.margin},
                                      {"c1", row.c1},
                                      {"c3", row.c3},
                                      {"c4", row.c4},
                                      {"c5", row.c5},
                                      {"verdict", verdict_name(row.verdict)}});
  }
  blk.summary = {{"pass", rep.n_pass},
                 {"fail", rep.n_fail},
                 {"inconclusive", rep.n_inconclusive},
                 {"equivalence_violations", rep.n_violation},
                 {"excluded_irregular", rep.excluded_irregular}};
  blk.verdict = rep.overall;
  return blk;
}

}  // namespace

Report run_verify_torus(const RunOptions& opt) {
  Report rep;
  rep.command = "verify-torus";
  rep.config_hash = fnv1a_hex("builtin:verify-torus");
  rep.seed = opt.seed;
  rep.grid = opt.grid;
  rep.tol = opt.tol;

  const Coframe Ct = torus_coframe();
  const Coframe C0 = standard_coframe(4);
  const ScalarField f = torus_f();
  const ParamSurface S = torus_embedding();

  {  // the displayed identity, off the zero set
    CheckBlock blk;
    blk.name = "identity";
    blk.inputs = {{"points", 1000}, {"box", {-2.0, 2.0}}};
    double max_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Eigen::VectorXd p = halton_point(i, 4, -2.0, 2.0);
      const Complex got = offset_identity_check(f, Ct, p);
      const Complex want = torus_identity_reference(p);
      const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
      max_err = std::max(max_err, err);
      blk.samples.push_back(OrderedJson{{"p", point_json(p)}, {"rel_err", err}});
    }
    blk.summary = {{"max_rel_err", max_err}, {"tol", 1e-10}};
    blk.verdict = pass_fail(max_err <= 1e-10);
    rep.checks.push_back(std::move(blk));
  }

  {  // criterion on the unit bicircle
    std::vector<ZeroSetSample> samples;
    for (int i = 0; i < opt.grid; ++i)
      for (int j = 0; j < opt.grid; ++j)
        samples.push_back(
            sample_at(f, S.at(kTwoPi * i / opt.grid, kTwoPi * j / opt.grid).pos));
    rep.checks.push_back(criterio_block(f, Ct, samples, opt.tol));
  }

  {  // non-integrability witness and the integrable control
    CheckBlock blk;
    blk.name = "nijenhuis";
    Eigen::VectorXd w(4);
    w << 1, 0, 1, 0;
    blk.inputs = {{"witness_point", point_json(w)}};
    double max_norm = 0.0;
    const auto all = nijenhuis_all(Ct, w);
    const MatrixField jf = coframe_j_field(Ct);
    double max_fd_rel = 0.0;
    for (int a = 1; a <= 4; ++a) {
      for (int b = a + 1; b <= 4; ++b) {
        const double exact = all[a - 1][b - 1].norm();
        const double fd = nijenhuis_fd(jf, w, a, b).norm;
        max_norm = std::max(max_norm, exact);
        max_fd_rel = std::max(max_fd_rel, std::abs(exact - fd) / std::max(1.0, exact));
        blk.samples.push_back(
            OrderedJson{{"a", a}, {"b", b}, {"norm", exact}, {"fd_norm", fd}});
      }
    }
    const DSplit sp = split_d(Ct, Ct.alpha[0], w);
    double std_max = 0.0;
    Rng rng(opt.seed + 17);
    for (int t = 0; t < 50; ++t) {
      const Eigen::VectorXd p = rng.point(4, -2.0, 2.0);
      const auto n0 = nijenhuis_all(C0, p);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) std_max = std::max(std_max, n0[a][b].norm());
    }
    blk.summary = {{"max_norm", max_norm},
                   {"fd_consistency_rel", max_fd_rel},
                   {"abar_part_of_dalpha1", sp.abar_part.norm()},
                   {"standard_coframe_max", std_max}};
    blk.verdict = pass_fail(max_norm > 0.1 && max_fd_rel <= 1e-6 &&
                            sp.abar_part.norm() > 0.1 && std_max <= 1e-12);
    rep.checks.push_back(std::move(blk));
  }

  {  // the induced structure on the embedded torus is the elliptic one
    CheckBlock blk;
    blk.name = "pullback";
    blk.inputs = {{"grid", opt.grid}};
    double max_defect = 0.0, max_oracle = 0.0;
    for (int i = 0; i < opt.grid; ++i) {
      for (int j = 0; j < opt.grid; ++j) {
        const double u = kTwoPi * i / opt.grid, v = kTwoPi * j / opt.grid;
        OrderedJson row{{"u", u}, {"v", v}};
        const Complex eiu = std::exp(Complex(0, u)), eiv = std::exp(Complex(0, v));
        const Complex oracle1 = Complex(0, 1) * eiu, oracle2 = eiv;
        int idx = 0;
        for (const auto* pair :
             {&oracle1, &oracle2}) {
          const AltTensor pb = pullback(Ct.alpha[idx], S, u, v);
          const Complex cu = pb.coeff(MultiIndex{1});
          const Complex cv = pb.coeff(MultiIndex{2});
          // proportionality to du + i dv
          const double scale = std::sqrt(std::norm(cu) + std::norm(cv));
          const double defect = std::abs(cv - Complex(0, 1) * cu) / scale;
          const double oracle_err = std::abs(cu - *pair) + std::abs(cv - Complex(0, 1) * (*pair));
          max_defect = std::max(max_defect, defect);
          max_oracle = std::max(max_oracle, oracle_err);
          row[idx == 0 ? "defect_alpha1" : "defect_alpha2"] = defect;
          ++idx;
        }
        blk.samples.push_back(std::move(row));
      }
    }
    blk.summary = {{"max_proportionality_defect", max_defect},
                   {"max_hand_oracle_err", max_oracle},
                   {"tol", 1e-10}};
    blk.verdict = pass_fail(max_defect <= 1e-10 && max_oracle <= 1e-9);
    rep.checks.push_back(std::move(blk));
  }

  const FormField omega0 = standard_omega(4);
  const FormField theta0 = standard_theta(4);

  {  // taming certificate for the torus structure
    CheckBlock blk;
    blk.name = "taming";
    blk.inputs = {{"omega", "standard"}, {"theta", "standard"}, {"grid", 64}};
    const Certificate cert = non_tameability_certificate(Ct, S, omega0, &theta0, 64);
    const TamingReport tr = taming_margin(omega0, Ct, S, opt.grid);
    for (std::size_t k = 0; k < tr.margins.size(); ++k)
      blk.samples.push_back(OrderedJson{{"margin", tr.margins[k]}});
    blk.summary = {{"integral_abs", std::abs(cert.integral)},
                   {"margin_min", cert.margin_min},
                   {"margin_max", cert.margin_max},
                   {"theta_verified", cert.theta_verified},
                   {"invariance_defect", cert.invariance_defect}};
    blk.verdict = pass_fail(!cert.refused && std::abs(cert.integral) <= 1e-10 &&
                            cert.theta_verified && std::abs(cert.margin_min) <= 1e-12 &&
                            std::abs(cert.margin_max) <= 1e-12);
    rep.certificates.push_back(certificate_to_json(cert));
    rep.checks.push_back(std::move(blk));
  }

  {  // control: the standard pair tames, and the certificate refuses
    CheckBlock blk;
    blk.name = "taming-control";
    blk.inputs = {{"coframe", "standard"}, {"omega", "standard"}, {"grid", opt.grid}};
    const TamingReport tr = taming_margin(omega0, C0, S, opt.grid);
    const Certificate cert = non_tameability_certificate(C0, S, omega0, &theta0, 64);
    blk.summary = {{"margin_min", tr.margin_min},
                   {"invariance_defect", tr.max_tangent_defect},
                   {"certificate_refused", cert.refused}};
    blk.verdict = pass_fail(tr.margin_min >= 0.99 && cert.refused &&
                            tr.max_tangent_defect > 1e-3);
    rep.certificates.push_back(certificate_to_json(cert));
    rep.checks.push_back(std::move(blk));
  }

  {  // structure sanity at random points for both coframes
    Rng rng(opt.seed + 1);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 1000; ++i) pts.push_back(rng.point(4, -2.0, 2.0));
    CheckBlock t = structure_block(Ct, pts, opt.tol);
    t.name = "structure-torus";
    rep.checks.push_back(std::move(t));
    CheckBlock s = structure_block(C0, pts, opt.tol);
    s.name = "structure-standard";
    rep.checks.push_back(std::move(s));
  }

  return rep;
}

Report run_criterio(const ScenarioConfig& cfg, const RunOptions& opt,
                    const std::string& config_hash) {
  if (!cfg.f) throw ConfigError("criterio needs 'f'", "/f");
  if (!cfg.coframe) throw ConfigError("criterio needs 'coframe'", "/coframe");
  Report rep;
  rep.command = "criterio";
  rep.config_hash = config_hash;
  rep.seed = opt.seed;
  rep.grid = opt.grid;
  rep.tol = cfg.tol("criterio", opt.tol);

  std::vector<ZeroSetSample> samples;
  int failed_projections = 0;
  if (cfg.surface) {
    for (int i = 0; i < opt.grid; ++i)
      for (int j = 0; j < opt.grid; ++j)
        samples.push_back(
            sample_at(*cfg.f, cfg.surface->at(kTwoPi * i / opt.grid, kTwoPi * j / opt.grid).pos));
  }
  std::vector<Eigen::VectorXd> seeds = cfg.seeds;
  if (seeds.empty() && !cfg.surface) {
    const int want = opt.grid * opt.grid;
    for (int i = 0; i < want; ++i)
      seeds.push_back(halton_point(opt.seed + i, cfg.ambient_dim, -2.0, 2.0));
  }
  for (const auto& seed : seeds) {
    try {
      samples.push_back(project_to_zero_set(*cfg.f, seed));
    } catch (const ProjectionError&) {
      ++failed_projections;
    }
  }
  if (samples.empty())
    throw ProjectionError("no zero-set samples could be produced from the seeds", {});

  CheckBlock blk = criterio_block(*cfg.f, *cfg.coframe, samples, rep.tol);
  blk.inputs["failed_projections"] = failed_projections;
  rep.checks.push_back(std::move(blk));
  return rep;
}

Report run_jlambda(const ScenarioConfig& cfg, const RunOptions& opt,
                   const std::string& config_hash) {
  if (!cfg.tau) throw ConfigError("jlambda needs 'tau'", "/tau");
  Report rep;
  rep.command = "jlambda";
  rep.config_hash = config_hash;
  rep.seed = opt.seed;
  rep.grid = opt.grid;
  rep.tol = cfg.tol("pullback", 1e-9);

  const TauSpec& spec = *cfg.tau;
  const TauFields tf = parse_tau(spec);
  const Coframe CL = build_j_lambda(spec);
  const ProductTorus torus{spec.n};
  const int n = spec.n;

  if (wants(cfg, "spanning")) {  // tau spanning condition over the angle torus
    CheckBlock blk;
    blk.name = "spanning";
    blk.inputs = {{"grid", opt.grid}};
    double max_cond = 0.0;
    const int g = std::max(2, (n == 1) ? opt.grid : 4);
    std::vector<int> shape(2 * n, g);
    int total = 1;
    for (int s : shape) total *= s;
    for (int c = 0; c < total; ++c) {
      int rem = c;
      Eigen::VectorXd th(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        th[i] = kTwoPi * (rem % g) / g;
        rem /= g;
      }
      const double cond = tau_spanning_condition(tf, th);
      max_cond = std::max(max_cond, cond);
      blk.samples.push_back(OrderedJson{{"cond", cond}});
    }
    blk.summary = {{"max_condition", max_cond}, {"cap", kCoframeConditionCap}};
    blk.verdict = pass_fail(max_cond <= kCoframeConditionCap);
    rep.checks.push_back(std::move(blk));
  }

  if (wants(cfg, "pullback-identity")) {  // i^*(alpha^tau) = i^*(beta^tau) = zeta
    CheckBlock blk;
    blk.name = "pullback-identity";
    const int g = (n == 1) ? opt.grid : 4;
    blk.inputs = {{"grid_per_angle", g}};
    double max_err = 0.0;
    std::vector<int> shape(2 * n, g);
    int total = 1;
    for (int s : shape) total *= s;
    for (int c = 0; c < total; ++c) {
      int rem = c;
      Eigen::VectorXd th(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        th[i] = kTwoPi * (rem % g) / g + 0.05;  // keep off the angle cut
        rem /= g;
      }
      double row_err = 0.0;
      for (int i = 0; i < n; ++i) {
        const Eigen::VectorXcd want = zeta_components(tf, i, th);
        const Eigen::VectorXcd a = pullback_product_torus(CL.alpha[i], torus, th);
        const Eigen::VectorXcd b = pullback_product_torus(CL.alpha[n + i], torus, th);
        row_err = std::max({row_err, (a - want).norm(), (b - want).norm()});
      }
      max_err = std::max(max_err, row_err);
      blk.samples.push_back(OrderedJson{{"err", row_err}});
    }
    blk.summary = {{"max_err", max_err}, {"tol", rep.tol}};
    blk.verdict = pass_fail(max_err <= rep.tol);
    rep.checks.push_back(std::move(blk));
  }

  if (wants(cfg, "structure")) {  // structure sanity away from the coordinate zero sets
    Rng rng(opt.seed + 2);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 1000; ++i) pts.push_back(rng.annulus_point(2 * n, 0.5, 1.5));
    rep.checks.push_back(structure_block(CL, pts, opt.tol));
  }

  return rep;
}

Report run_octonion(const RunOptions& opt) {
  Report rep;
  rep.command = "octonion";
  rep.config_hash = fnv1a_hex("builtin:octonion");
  rep.seed = opt.seed;
  rep.grid = opt.grid;
  rep.tol = opt.tol;

  {  // table pins, alternativity, norm multiplicativity, non-associativity
    CheckBlock blk;
    blk.name = "table-audit";
    const auto& T = octonion_table();
    const bool pins = T[1][2].sign == 1 && T[1][2].index == 3 && T[1][4].sign == 1 &&
                      T[1][4].index == 5 && T[2][4].sign == 1 && T[2][4].index == 6 &&
                      T[3][4].sign == 1 && T[3][4].index == 7 && T[2][1].sign == -1 &&
                      T[2][1].index == 3;
    Rng rng(opt.seed + 3);
    double alt = 0.0, normdef = 0.0;
    for (int t = 0; t < 1000; ++t) {
      Octonion a, b;
      for (int i = 0; i < 8; ++i) {
        a.c[i] = rng.uniform(-1, 1);
        b.c[i] = rng.uniform(-1, 1);
      }
      const Octonion ab = octonion_mul(a, b);
      alt = std::max(alt, (octonion_mul(a, ab) - octonion_mul(octonion_mul(a, a), b)).norm());
      alt = std::max(alt, (octonion_mul(ab, b) - octonion_mul(a, octonion_mul(b, b))).norm());
      normdef = std::max(normdef, std::abs(ab.norm() - a.norm() * b.norm()));
    }
    // (e1 e2) e4 = e7 but e1 (e2 e4) = -e7
    const Octonion left = octonion_mul(octonion_mul(Octonion::unit(1), Octonion::unit(2)),
                                       Octonion::unit(4));
    const Octonion right = octonion_mul(Octonion::unit(1),
                                        octonion_mul(Octonion::unit(2), Octonion::unit(4)));
    const bool nonassoc = (left - right).norm() > 1.0;
    blk.summary = {{"pinned_products_ok", pins},
                   {"alternativity_max", alt},
                   {"norm_multiplicativity_max", normdef},
                   {"nonassociativity_witness", nonassoc},
                   {"table_csv", octonion_table_csv()}};
    blk.verdict = pass_fail(pins && alt <= 1e-12 && normdef <= 1e-12 && nonassoc);
    rep.checks.push_back(std::move(blk));
  }

  {  // J_p v = p v on S^6
    CheckBlock blk;
    blk.name = "s6-structure";
    Rng rng(opt.seed + 4);
    double sq = 0.0, imag = 0.0, orth = 0.0;
    for (int t = 0; t < 1000; ++t) {
      Eigen::VectorXd p = rng.point(7, -1, 1);
      p.normalize();
      Eigen::VectorXd v = rng.point(7, -1, 1);
      v -= v.dot(p) * p;
      const Eigen::VectorXd jv = s6_acs(p, v);
      orth = std::max(orth, std::abs(jv.dot(p)));
      sq = std::max(sq, (s6_acs(p, jv) + v).norm());
    }
    const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(7, 0);
    const bool pin1 = (s6_acs(e1, Eigen::VectorXd::Unit(7, 1)) - Eigen::VectorXd::Unit(7, 2))
                          .norm() < 1e-15;
    const bool pin2 = (s6_acs(e1, Eigen::VectorXd::Unit(7, 3)) - Eigen::VectorXd::Unit(7, 4))
                          .norm() < 1e-15;
    blk.summary = {{"max_j_square_defect", sq},
                   {"max_orthogonality_defect", orth},
                   {"pin_e1_e2", pin1},
                   {"pin_e1_e4", pin2}};
    blk.verdict = pass_fail(sq <= 1e-12 && orth <= 1e-12 && pin1 && pin2);
    rep.checks.push_back(std::move(blk));
  }

  {  // CP^1 = S^6 cut by the quaternion plane, with a failing control plane
    CheckBlock blk;
    blk.name = "cp1-invariance";
    const double defect = plane_invariance_defect({1, 2, 3}, 500);
    const double control = plane_invariance_defect({1, 2, 4}, 100);
    blk.summary = {{"invariance_defect", defect}, {"control_plane_defect", control}};
    blk.verdict = pass_fail(defect <= 1e-12 && control >= 0.1);
    rep.checks.push_back(std::move(blk));
  }

  {  // stereographic pushforward to R^6
    CheckBlock blk;
    blk.name = "pushforward";
    const StereographicStructure st(4);
    blk.inputs = {{"pole_axis", 4}};
    Rng rng(opt.seed + 5);
    double sq = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Eigen::VectorXd q = rng.point(6, -3.0, 3.0);
      const Eigen::MatrixXd J = st.j_prime(q);
      sq = std::max(sq, (J * J + Eigen::MatrixXd::Identity(6, 6)).norm());
    }
    const double pushed = st.pushed_sphere_invariance_defect(500);
    Eigen::VectorXd qg(6);
    qg << 0.3, -0.2, 0.5, 0.1, -0.4, 0.25;
    double nmax = 0.0;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        nmax = std::max(nmax, nijenhuis_fd(st.as_matrix_field(), qg, a, b).norm);
    blk.summary = {{"max_j_square_defect", sq},
                   {"pushed_sphere_invariance_defect", pushed},
                   {"nijenhuis_fd_at_generic_point", nmax}};
    blk.verdict = pass_fail(sq <= 1e-10 && pushed <= 1e-9 && nmax > 0.1);
    rep.checks.push_back(std::move(blk));
  }

  return rep;
}

Report run_tame(const ScenarioConfig& cfg, const RunOptions& opt,
                const std::string& config_hash) {
  if (!cfg.coframe) throw ConfigError("tame needs 'coframe'", "/coframe");
  if (!cfg.surface) throw ConfigError("tame needs 'surface'", "/surface");
  Report rep;
  rep.command = "tame";
  rep.config_hash = config_hash;
  rep.seed = opt.seed;
  rep.grid = opt.grid;
  rep.tol = cfg.tol("taming", opt.tol);

  const bool defaulted = !cfg.omega.has_value();
  const FormField omega = cfg.omega ? *cfg.omega : standard_omega(cfg.ambient_dim);
  std::optional<FormField> theta = cfg.theta;
  if (defaulted && !theta) theta = standard_theta(cfg.ambient_dim);

  if (theta && wants(cfg, "stokes")) {
    CheckBlock blk;
    blk.name = "stokes";
    const StokesReport sr = stokes_witness(*theta, *cfg.surface, 64);
    blk.summary = {{"integral", cnum(sr.integral)},
                   {"normalized", sr.normalized},
                   {"scale", sr.scale}};
    blk.verdict = pass_fail(sr.normalized <= 1e-8);
    rep.checks.push_back(std::move(blk));
  }

  if (wants(cfg, "taming")) {
    CheckBlock blk;
    blk.name = "taming";
    const TamingReport tr = taming_margin(omega, *cfg.coframe, *cfg.surface, opt.grid);
    for (double m : tr.margins) blk.samples.push_back(OrderedJson{{"margin", m}});
    blk.summary = {{"margin_min", tr.margin_min},
                   {"margin_max", tr.margin_max},
                   {"integral", cnum(tr.integral)},
                   {"integral_error_estimate", tr.integral_error},
                   {"max_imag", tr.max_imag},
                   {"invariant_planes", tr.invariant_planes},
                   {"max_tangent_defect", tr.max_tangent_defect},
                   {"text", tr.verdict_text}};
    blk.verdict = Verdict::Pass;  // informational; the certificate carries the claim
    rep.checks.push_back(std::move(blk));
  }

  if (wants(cfg, "certificate")) {
    CheckBlock blk;
    blk.name = "certificate";
    const Certificate cert = non_tameability_certificate(
        *cfg.coframe, *cfg.surface, omega, theta ? &*theta : nullptr, 64);
    blk.summary = {{"refused", cert.refused}, {"conclusion", cert.conclusion}};
    blk.verdict = cert.verdict;
    rep.certificates.push_back(certificate_to_json(cert));
    rep.checks.push_back(std::move(blk));
  }

  return rep;
}

Report run_nijenhuis_sweep(const ScenarioConfig& cfg, const RunOptions& opt,
                           const std::string& config_hash) {
  if (!cfg.coframe && !cfg.tau) throw ConfigError("nijenhuis needs 'coframe' or 'tau'", "/");
  const Coframe C = cfg.coframe ? *cfg.coframe : build_j_lambda(*cfg.tau);
  Report rep;
  rep.command = "nijenhuis";
  rep.config_hash = config_hash;
  rep.seed = opt.seed;
  rep.grid = opt.grid;
  rep.tol = opt.tol;

  CheckBlock blk;
  blk.name = "nijenhuis-sweep";
  blk.inputs = {{"points", opt.points}};
  double max_norm = 0.0;
  Eigen::VectorXd witness;
  int degenerate = 0, evaluated = 0;
  for (int i = 0; i < opt.points; ++i) {
    Eigen::VectorXd p = cfg.tau ? Rng(opt.seed + i).annulus_point(C.dim / 2, 0.5, 1.5)
                                : halton_point(opt.seed + i, C.dim, -2.0, 2.0);
    try {
      const auto all = nijenhuis_all(C, p);
      double local = 0.0;
      for (int a = 0; a < C.dim; ++a)
        for (int b = a + 1; b < C.dim; ++b) local = std::max(local, all[a][b].norm());
      blk.samples.push_back(OrderedJson{{"p", point_json(p)}, {"max_norm", local}});
      if (local > max_norm) {
        max_norm = local;
        witness = p;
      }
      ++evaluated;
    } catch (const DegenerateCoframeError&) {
      ++degenerate;
    } catch (const EvalError&) {
      ++degenerate;
    }
  }
  blk.summary = {{"max_norm", max_norm},
                 {"evaluated", evaluated},
                 {"degenerate_points", degenerate}};
  if (max_norm > 10.0 * opt.tol && witness.size() > 0) {
    blk.summary["non_integrability_witnessed_at"] = point_json(witness);
  }
  blk.verdict = pass_fail(evaluated > 0);
  rep.checks.push_back(std::move(blk));
  return rep;
}

}  // namespace acg
