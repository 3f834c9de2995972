#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acg/scalar_field.hpp"
#include "support.hpp"

using namespace acg;

namespace {

Jet jet_of(const std::string& src, const Eigen::VectorXd& p, int dim = 4) {
  return eval_jet(parse(src, dim), p);
}

Eigen::VectorXd pt4(double a, double b, double c, double d) {
  Eigen::VectorXd p(4);
  p << a, b, c, d;
  return p;
}

}  // namespace

TEST_CASE("zbar is the conjugate of z under evaluation") {
  Rng rng(11);
  const Expr zb = parse("zbar1", 4);
  const Expr cz = parse("conj(z1)", 4);
  for (int t = 0; t < 50; ++t) {
    const Eigen::VectorXd p = rng.point(4, -2, 2);
    const Jet a = eval_jet(zb, p);
    const Jet b = eval_jet(cz, p);
    CHECK(std::abs(a.v - b.v) == 0.0);
    CHECK((a.g - b.g).norm() == 0.0);
  }
}

TEST_CASE("the alpha_1 coefficient pattern parses") {
  CHECK_NOTHROW(parse("z1 - I*z1*z2*zbar2", 4));
}

TEST_CASE("variable index out of range is a parse error") {
  CHECK_THROWS_AS(parse("x5", 4), ParseError);
  CHECK_THROWS_AS(parse("z3", 4), ParseError);
  CHECK_THROWS_AS(parse("zbar9", 4), ParseError);
  try {
    parse("1 + x5", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("syntax errors carry position and expected set") {
  try {
    parse("z1 + ", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(e.expected().find("number") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("exp z1", 4), ParseError);
  CHECK_THROWS_AS(parse("(z1", 4), ParseError);
  CHECK_THROWS_AS(parse("z1^x2", 4), ParseError);
  CHECK_THROWS_AS(parse("foo(z1)", 4), ParseError);
  CHECK_THROWS_AS(parse("z1 $ 2", 4), ParseError);
}

TEST_CASE("ambient dimension precondition") {
  CHECK_THROWS_AS(parse("x1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse("x1", 0), std::invalid_argument);
}

TEST_CASE("|z|^2 jet at (3,4)") {
  const Jet j = jet_of("z1*zbar1", pt4(3, 4, 0, 0));
  CHECK(j.v.real() == doctest::Approx(25.0));
  CHECK(j.v.imag() == doctest::Approx(0.0));
  CHECK(j.g[0].real() == doctest::Approx(6.0));
  CHECK(j.g[1].real() == doctest::Approx(8.0));
  CHECK(std::abs(j.g[2]) == doctest::Approx(0.0));
  CHECK(std::abs(j.g[3]) == doctest::Approx(0.0));
}

TEST_CASE("exp(x1) jet at the origin") {
  const Jet j = jet_of("exp(x1)", pt4(0, 0, 0, 0));
  CHECK(j.v.real() == doctest::Approx(1.0));
  CHECK(j.g[0].real() == doctest::Approx(1.0));
  CHECK(j.h(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("hand-substitution value of the alpha_1 coefficient at z=w=1") {
  const Jet j = jet_of("z1 - I*z1*z2*zbar2", pt4(1, 0, 1, 0));
  CHECK(std::abs(j.v - Complex(1.0, -1.0)) < 1e-15);
}

TEST_CASE("division by zero reports the offending subexpression") {
  try {
    jet_of("1/(x1 - x1)", pt4(1, 0, 0, 0));
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.subexpr().find("x1 - x1") != std::string::npos);
  }
  CHECK_THROWS_AS(jet_of("x1^-1", pt4(0, 1, 0, 0)), EvalError);
  CHECK_NOTHROW(jet_of("x1^-2", pt4(0.5, 0, 0, 0)));
  CHECK_NOTHROW(jet_of("x1^0", pt4(0, 0, 0, 0)));  // 0^0 = 1 by convention
}

TEST_CASE("pretty-print . parse is a fixed point") {
  const char* corpus[] = {
      "z1 - I*z1*z2*zbar2",
      "(x1 + x2)*(x3 - x4)^2",
      "-x1^2",
      "exp(sin(z1)/(abs2(z2) + 1))",
      "1/(z1 + I)",
      "conj(z1)*z2 - re(x3*x4) + im(zbar1)",
      "2.5e-3 + x1",
      "-(x1 + x2)",
      "x1 - (x2 - x3)",
      "x1/(x2*x3)",
  };
  for (const char* src : corpus) {
    const std::string once = to_string(parse(src, 4));
    const std::string twice = to_string(parse(once, 4));
    CHECK(once == twice);
  }
  test::ExprGen gen(99, 4);
  for (int t = 0; t < 200; ++t) {
    const std::string src = gen.generate(4);
    const std::string once = to_string(parse(src, 4));
    CHECK(once == to_string(parse(once, 4)));
  }
}

TEST_CASE("conj(eval(e)) = eval(conj(e)) at random points") {
  test::ExprGen gen(7, 4);
  Rng rng(8);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 150; ++t) {
    const std::string src = gen.generate(4);
    const Expr e = parse(src, 4);
    const Expr ce = parse("conj(" + src + ")", 4);
    const Eigen::VectorXd p = rng.point(4, -2, 2);
    try {
      const Jet a = eval_jet(e, p);
      const Jet b = eval_jet(ce, p);
      const double scale = std::max({1.0, std::abs(a.v), a.g.norm(), a.h.norm()});
      CHECK(std::abs(std::conj(a.v) - b.v) / scale < 1e-12);
      CHECK((a.g.conjugate() - b.g).norm() / scale < 1e-12);
      CHECK((a.h.conjugate() - b.h).norm() / scale < 1e-12);
      ++checked;
    } catch (const EvalError&) {
      continue;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("gradients and Hessians match central finite differences") {
  // The independent oracle for the whole AD kernel: 1000 random
  // expressions, evaluation points filtered only for smoothness scale.
  test::ExprGen gen(2024, 4);
  Rng rng(55);
  int expr_count = 0, point_count = 0, skipped = 0;
  double worst_g = 0.0, worst_h = 0.0;
  for (int t = 0; t < 1400 && expr_count < 1000; ++t) {
    const std::string src = gen.generate(6);
    Expr e;
    e = parse(src, 4);
    ++expr_count;
    auto value = [&](const Eigen::VectorXd& q) { return eval_jet(e, q).v; };
    int accepted = 0;
    for (int trial = 0; trial < 12 && accepted < 2; ++trial) {
      const Eigen::VectorXd p = rng.point(4, -1.5, 1.5);
      Jet j;
      try {
        j = eval_jet(e, p);
        // Probe the FD stencil for evaluability before comparing.
        for (int k = 0; k < 4; ++k) {
          Eigen::VectorXd q = p;
          q[k] += 2e-4;
          (void)eval_jet(e, q).v;
          q[k] -= 4e-4;
          (void)eval_jet(e, q).v;
        }
      } catch (const EvalError&) {
        continue;
      }
      const double mag = std::max({std::abs(j.v), j.g.cwiseAbs().maxCoeff(),
                                   j.h.cwiseAbs().maxCoeff()});
      if (!std::isfinite(mag) || mag > 1e3) {
        ++skipped;
        continue;
      }
      Eigen::VectorXcd gfd;
      Eigen::MatrixXcd hfd;
      try {
        gfd = test::fd_gradient(value, p);
        hfd = test::fd_hessian(value, p);
      } catch (const EvalError&) {
        continue;
      }
      for (int k = 0; k < 4; ++k) {
        const double scale = std::max(1.0, std::abs(j.g[k]));
        worst_g = std::max(worst_g, std::abs(j.g[k] - gfd[k]) / scale);
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const double scale = std::max(1.0, std::abs(j.h(a, b)));
          worst_h = std::max(worst_h, std::abs(j.h(a, b) - hfd(a, b)) / scale);
        }
      ++accepted;
      ++point_count;
    }
  }
  CHECK(expr_count == 1000);
  CHECK(point_count > 800);
  CHECK(worst_g <= 1e-6);
  CHECK(worst_h <= 1e-4);
}

TEST_CASE("Hessians are exactly symmetric") {
  test::ExprGen gen(31, 4);
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    try {
      const Jet j = eval_jet(parse(gen.generate(5), 4), rng.point(4, -2, 2));
      CHECK((j.h - j.h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    } catch (const EvalError&) {
    }
  }
}

TEST_CASE("scalar field algebra keeps order bookkeeping") {
  const ScalarField f = ScalarField::from_expr("z1*zbar1", 4);
  CHECK(f.jet_order() == 2);
  const ScalarField df = partial(f, 1);
  CHECK(df.jet_order() == 1);
  CHECK(partial(df, 2).jet_order() == 0);
  CHECK_THROWS_AS(partial(partial(df, 2), 1), std::invalid_argument);
  Eigen::VectorXd p = pt4(3, 4, 0, 0);
  CHECK(df.value(p).real() == doctest::Approx(6.0));
  // d/dx2 of d/dx1 |z|^2 = 0, diagonal = 2
  CHECK(partial(df, 1).value(p).real() == doctest::Approx(2.0));
  CHECK(std::abs(partial(df, 2).value(p)) == doctest::Approx(0.0));
}

TEST_CASE("angle field matches atan2 with exact derivatives") {
  const ScalarField u = ScalarField::angle(1, 4);
  Rng rng(77);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd p = rng.point(4, -2, 2);
    if (std::hypot(p[0], p[1]) < 0.3) continue;
    const Jet j = u.eval(p);
    CHECK(j.v.real() == doctest::Approx(std::atan2(p[1], p[0])));
    auto value = [&](const Eigen::VectorXd& q) { return u.eval(q).v; };
    const auto gfd = test::fd_gradient(value, p);
    const auto hfd = test::fd_hessian(value, p);
    CHECK((j.g - gfd).norm() < 1e-6);
    CHECK((j.h - hfd).norm() < 1e-4);
  }
  Eigen::VectorXd origin = pt4(0, 0, 1, 1);
  CHECK_THROWS_AS(u.eval(origin), EvalError);
}

TEST_CASE("compose applies the second-order chain rule") {
  // tau(u, v) = exp(I u) sin(v) composed with the angle map of z1, z2.
  const ScalarField outer = ScalarField::from_expr("exp(I*x1)*sin(x2)", 2);
  const ScalarField inner1 = ScalarField::angle(1, 4);
  const ScalarField inner2 = ScalarField::angle(2, 4);
  const ScalarField g = ScalarField::compose(outer, {inner1, inner2});
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    Eigen::VectorXd p = rng.point(4, 0.4, 1.8);
    const Jet j = g.eval(p);
    auto value = [&](const Eigen::VectorXd& q) { return g.eval(q).v; };
    CHECK((j.g - test::fd_gradient(value, p)).norm() < 1e-6);
    CHECK((j.h - test::fd_hessian(value, p)).norm() < 1e-4);
  }
}
