// Development scratch pad (replaced by the real CLI later).
#include <iostream>

#include "acg/constructions.hpp"
#include "acg/hypersurf.hpp"
#include "acg/sampling.hpp"
#include "acg/tame.hpp"

using namespace acg;

int main() {
  std::cout.precision(15);
  auto Ct = torus_coframe();
  auto C0 = standard_coframe(4);
  auto S = torus_embedding();
  auto f = torus_f();

  // identity sweep
  double iderr = 0;
  for (int i = 0; i < 1000; ++i) {
    auto p = halton_point(i, 4, -2.0, 2.0);
    Complex got = offset_identity_check(f, Ct, p);
    Complex want = torus_identity_reference(p);
    iderr = std::max(iderr, std::abs(got - want) / std::max(1.0, std::abs(want)));
  }
  std::cout << "identity max rel err: " << iderr << "\n";
  Eigen::VectorXd p21(4);
  p21 << 2, 0, 1, 0;
  std::cout << "identity at (2,1): " << offset_identity_check(f, Ct, p21) << " want (0,-12)\n";

  // criterio positive (torus grid) and negative (plane)
  std::vector<ZeroSetSample> samples;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      double u = 2 * M_PI * i / 16, v = 2 * M_PI * j / 16;
      samples.push_back(sample_at(f, S.at(u, v).pos));
    }
  auto rep = criterio_check(f, Ct, samples);
  double m1 = 0, m3 = 0, m4 = 0, m5 = 0;
  for (auto& r : rep.rows) {
    m1 = std::max(m1, r.c1);
    m3 = std::max(m3, r.c3);
    m4 = std::max(m4, r.c4);
    m5 = std::max(m5, r.c5);
  }
  std::cout << "torus criterio verdict " << verdict_name(rep.overall) << " c1max " << m1
            << " c3max " << m3 << " c4max " << m4 << " c5max " << m5 << "\n";

  ScalarField fplane = ScalarField::from_expr("z1 - zbar2", 4);
  std::vector<ZeroSetSample> ps;
  Rng rng(7);
  for (int i = 0; i < 64; ++i) ps.push_back(project_to_zero_set(fplane, rng.point(4, -2, 2)));
  auto prep = criterio_check(fplane, C0, ps);
  double pc5 = 1e9;
  for (auto& r : prep.rows) pc5 = std::min(pc5, r.c5);
  std::cout << "plane criterio verdict " << verdict_name(prep.overall) << " min c5 " << pc5
            << "\n";

  // torus projection example
  Eigen::VectorXd seed(4);
  seed << 2, 0, 0.5, 0;
  auto zs = project_to_zero_set(f, seed);
  std::cout << "projected: " << zs.p.transpose() << " res " << zs.residual << " margin "
            << zs.margin << " iters " << zs.iterations << "\n";

  // octonion pins
  auto& T = octonion_table();
  std::cout << "e1e2 -> sign " << T[1][2].sign << " idx " << T[1][2].index << "; e1e4 -> "
            << T[1][4].sign << "," << T[1][4].index << "; e2e4 -> " << T[2][4].sign << ","
            << T[2][4].index << "; e3e4 -> " << T[3][4].sign << "," << T[3][4].index << "\n";
  // alternativity + norm sweep
  Rng orng(1);
  double altmax = 0, normmax = 0;
  for (int t = 0; t < 1000; ++t) {
    Octonion a, b;
    for (int i = 0; i < 8; ++i) {
      a.c[i] = orng.uniform(-1, 1);
      b.c[i] = orng.uniform(-1, 1);
    }
    auto ab = octonion_mul(a, b);
    auto l = octonion_mul(a, ab) - octonion_mul(octonion_mul(a, a), b);
    auto r = octonion_mul(ab, b) - octonion_mul(a, octonion_mul(b, b));
    altmax = std::max({altmax, l.norm(), r.norm()});
    normmax = std::max(normmax, std::abs(ab.norm() - a.norm() * b.norm()));
  }
  std::cout << "alternativity " << altmax << " norm-mult " << normmax << "\n";

  std::cout << "cp1 defect: " << plane_invariance_defect({1, 2, 3}, 500) << " control "
            << plane_invariance_defect({1, 2, 4}, 100) << "\n";

  StereographicStructure st(4);
  Rng qrng(2);
  double jsq = 0;
  for (int t = 0; t < 1000; ++t) {
    Eigen::VectorXd q = qrng.point(6, -3, 3);
    auto J = st.j_prime(q);
    jsq = std::max(jsq, (J * J + Eigen::MatrixXd::Identity(6, 6)).norm());
  }
  std::cout << "pushed J'^2+I max: " << jsq << "\n";
  std::cout << "pushed sphere invariance: " << st.pushed_sphere_invariance_defect(500) << "\n";
  Eigen::VectorXd qg(6);
  qg << 0.3, -0.2, 0.5, 0.1, -0.4, 0.25;
  auto nfd = nijenhuis_fd(st.as_matrix_field(), qg, 1, 2);
  std::cout << "stereographic nijenhuis fd at generic q (1,2): " << nfd.norm << "\n";
  double nmax = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      nmax = std::max(nmax, nijenhuis_fd(st.as_matrix_field(), qg, a, b).norm);
  std::cout << "stereographic nijenhuis fd max: " << nmax << "\n";

  // base coframe pullbacks (n=1, n=2)
  for (int n : {1, 2}) {
    auto base = base_coframe_4n(n);
    ProductTorus PT{n};
    double err = 0;
    Rng arng(3);
    for (int t = 0; t < 64; ++t) {
      Eigen::VectorXd th = arng.point(2 * n, 0, 2 * M_PI);
      for (int i = 0; i < 2 * n; ++i) {
        auto comps = pullback_product_torus(base.alpha[i], PT, th);
        // expectation: dz_k for k = i mod n
        const int k = i % n;
        Eigen::VectorXcd want = Eigen::VectorXcd::Zero(2 * n);
        want[2 * k] = Complex(1, 0);
        want[2 * k + 1] = Complex(0, 1);
        err = std::max(err, (comps - want).norm());
      }
    }
    std::cout << "base coframe pullback err n=" << n << ": " << err << "\n";
  }

  // J_Lambda pullback identity for three tau specs, n=1 and n=2
  auto check_jl = [&](const TauSpec& ts, const char* nm) {
    auto t = parse_tau(ts);
    auto CL = build_j_lambda(ts);
    ProductTorus PT{ts.n};
    double err = 0;
    const int g = (ts.n == 1) ? 16 : 4;
    std::vector<int> idx(2 * ts.n, 0);
    // full grid over 2n angles
    int total = 1;
    for (int i = 0; i < 2 * ts.n; ++i) total *= g;
    for (int c = 0; c < total; ++c) {
      int rem = c;
      Eigen::VectorXd th(2 * ts.n);
      for (int i = 0; i < 2 * ts.n; ++i) {
        th[i] = 2 * M_PI * (rem % g) / g + 0.1;
        rem /= g;
      }
      for (int i = 0; i < ts.n; ++i) {
        auto za = pullback_product_torus(CL.alpha[i], PT, th);
        auto zb = pullback_product_torus(CL.alpha[ts.n + i], PT, th);
        auto want = zeta_components(t, i, th);
        err = std::max(err, (za - want).norm());
        err = std::max(err, (zb - want).norm());
      }
    }
    std::cout << "jlambda pullback err " << nm << " n=" << ts.n << ": " << err << "\n";
  };
  check_jl(TauSpec::identity(1), "identity");
  check_jl(TauSpec::identity(2), "identity");
  TauSpec tc;
  tc.n = 1;
  tc.tau = {{"1"}};
  tc.taubar = {{"0.3+0.1*I"}};
  check_jl(tc, "constant");
  TauSpec tp;
  tp.n = 1;
  tp.tau = {{"1"}};
  tp.taubar = {{"0.2*exp(I*x1)"}};
  check_jl(tp, "periodic");
  TauSpec tc2;
  tc2.n = 2;
  tc2.tau = {{"1", "0"}, {"0", "1"}};
  tc2.taubar = {{"0.3+0.1*I", "0.05"}, {"0", "0.2*exp(I*x3)"}};
  check_jl(tc2, "mixed");

  // taming: torus + standard omega
  auto w0 = standard_omega(4);
  auto th0 = standard_theta(4);
  auto trep = taming_margin(w0, Ct, S, 16);
  std::cout << "torus margins: min " << trep.margin_min << " max " << trep.margin_max
            << " invdef " << trep.max_tangent_defect << " integral " << trep.integral << "\n";
  auto cert = non_tameability_certificate(Ct, S, w0, &th0, 64);
  std::cout << "cert refused=" << cert.refused << " verdict " << verdict_name(cert.verdict)
            << "\n  conclusion: " << cert.conclusion << "\n";
  auto crep = taming_margin(w0, C0, S, 16);
  std::cout << "control margins: min " << crep.margin_min << " invdef "
            << crep.max_tangent_defect << "\n";
  auto ccert = non_tameability_certificate(C0, S, w0, &th0, 64);
  std::cout << "control refused=" << ccert.refused << " reason: " << ccert.refusal_reason
            << "\n";

  // quadrature pins
  FormField area(4, 2);
  area.add_term(MultiIndex{1, 2},
                ScalarField::constant(Complex(0, 0), 4));  // placeholder replaced below
  // omega = (x1 dx2 - x2 dx1) ^ (x3 dx4 - x4 dx3)
  FormField o1(4, 1), o2(4, 1);
  o1.add_term(MultiIndex{2}, ScalarField::coordinate(1, 4));
  o1.add_term(MultiIndex{1}, Complex(-1, 0) * ScalarField::coordinate(2, 4));
  o2.add_term(MultiIndex{4}, ScalarField::coordinate(3, 4));
  o2.add_term(MultiIndex{3}, Complex(-1, 0) * ScalarField::coordinate(4, 4));
  auto q = integrate_2form(o1.wedge(o2), S, 32);
  std::cout << "angular omega integral: " << q.value << " (want " << 4 * M_PI * M_PI
            << "), err est " << q.error_estimate << "\n";

  auto stw = stokes_witness(FormField::scalar(ScalarField::from_expr("sin(x1)", 4)).d(), S, 64);
  // d of scalar is exact 1-form; its d is 0; use theta = sin(x1) dx3 instead:
  FormField th1(4, 1);
  th1.add_term(MultiIndex{3}, ScalarField::from_expr("sin(x1)", 4));
  auto stw2 = stokes_witness(th1, S, 64);
  std::cout << "stokes sin(x1)dx3: " << stw2.normalized << "\n";

  // frame experiment: standard coframe
  auto nf = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd v(4);
    v << 2 * p[0], 2 * p[1], 0, 0;
    return v;
  };
  auto frep = quaternion_frame_experiment(C0, S, nf, 8);
  std::cout << "frame std: conj " << frep.max_conjugacy_error << " minW " << frep.min_w_norm
            << " tangency " << frep.max_tangency_defect << "\n";
  auto frep2 = quaternion_frame_experiment(Ct, S, nf, 8);
  std::cout << "frame torus: conj " << frep2.max_conjugacy_error << " minW "
            << frep2.min_w_norm << " tangency " << frep2.max_tangency_defect << " framestep "
            << frep2.max_frame_step << "\n";

  // torus coframe spanning sweep
  double maxcond = 0;
  for (int i = 0; i < 10000; ++i) {
    auto pp = halton_point(i, 4, -2, 2);
    maxcond = std::max(maxcond, j_at(Ct, pp).cond);
  }
  std::cout << "torus coframe max cond over sweep: " << maxcond << "\n";
  return 0;
}
