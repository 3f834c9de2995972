#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acg/constructions.hpp"
#include "acg/surface.hpp"
#include "support.hpp"

using namespace acg;

namespace {

AltTensor rand_tensor(Rng& rng, int dim, int degree) {
  AltTensor t(dim, degree);
  for (std::uint32_t m = 0; m < (1u << dim); ++m)
    if (std::popcount(m) == degree && rng.uniform() < 0.7)
      t.add(MultiIndex(m), Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)));
  return t;
}

FormField rand_1form(Rng& rng, test::ExprGen& gen, int dim) {
  FormField F(dim, 1);
  for (int k = 1; k <= dim; ++k)
    F.add_term(MultiIndex{k}, ScalarField::from_expr(gen.generate(3), dim));
  return F;
}

}  // namespace

TEST_CASE("wedge antisymmetry pins") {
  const AltTensor dx1 = AltTensor::basis(4, MultiIndex{1});
  const AltTensor dx2 = AltTensor::basis(4, MultiIndex{2});
  CHECK(dx1.wedge(dx2).coeff(MultiIndex{1, 2}) == Complex(1, 0));
  CHECK(dx2.wedge(dx1).coeff(MultiIndex{1, 2}) == Complex(-1, 0));
  CHECK(dx1.wedge(dx1).norm() == 0.0);
}

TEST_CASE("dz wedge dw hand expansion") {
  const Eigen::VectorXd p = Eigen::VectorXd::Zero(4);
  const AltTensor dz = FormField::dz(1, 4).eval(p);
  const AltTensor dw = FormField::dz(2, 4).eval(p);
  const AltTensor prod = dz.wedge(dw);
  CHECK(prod.coeff(MultiIndex{1, 3}) == Complex(1, 0));
  CHECK(prod.coeff(MultiIndex{1, 4}) == Complex(0, 1));
  CHECK(prod.coeff(MultiIndex{2, 3}) == Complex(0, 1));
  CHECK(prod.coeff(MultiIndex{2, 4}) == Complex(-1, 0));
  CHECK(prod.terms().size() == 4);
}

TEST_CASE("conjugation pins") {
  const Eigen::VectorXd p = Eigen::VectorXd::Zero(4);
  const AltTensor dz = FormField::dz(1, 4).eval(p);
  const AltTensor dzbar = FormField::dzbar(1, 4).eval(p);
  CHECK((conj(dz) - dzbar).norm() == 0.0);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const AltTensor a = rand_tensor(rng, 4, 2);
    CHECK((conj(conj(a)) - a).norm() == 0.0);
  }
  AltTensor i12 = AltTensor::basis(4, MultiIndex{1, 2}, Complex(0, 1));
  CHECK(conj(i12).coeff(MultiIndex{1, 2}) == Complex(0, -1));
}

TEST_CASE("apply pins and the taming-failure value") {
  const AltTensor dx12 = AltTensor::basis(4, MultiIndex{1, 2});
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(4, 0), e2 = Eigen::VectorXd::Unit(4, 1);
  CHECK(dx12.apply({e1, e2}).real() == doctest::Approx(1.0));
  CHECK(dx12.apply({e2, e1}).real() == doctest::Approx(-1.0));

  AltTensor omega = AltTensor::basis(4, MultiIndex{1, 2});
  omega.add(MultiIndex{3, 4}, Complex(1, 0));
  Eigen::VectorXd u(4), v(4);
  u << 0, 1, 0, 0;
  v << 0, 0, 0, 1;
  CHECK(std::abs(omega.apply({u, v})) == 0.0);  // the value driving the certificate

  Rng rng(4);
  const AltTensor a = rand_tensor(rng, 4, 3);
  const Eigen::VectorXd w = rng.point(4, -1, 1);
  CHECK(std::abs(a.apply({w, w, rng.point(4, -1, 1)})) < 1e-14);
}

TEST_CASE("apply is alternating and multilinear") {
  Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    const AltTensor a = rand_tensor(rng, 4, 2);
    const Eigen::VectorXd v1 = rng.point(4, -1, 1), v2 = rng.point(4, -1, 1),
                          v3 = rng.point(4, -1, 1);
    const double s = rng.uniform(-2, 2);
    CHECK(std::abs(a.apply({v1, v2}) + a.apply({v2, v1})) < 1e-12);
    const Complex lin = a.apply({v1 + s * v3, v2});
    CHECK(std::abs(lin - a.apply({v1, v2}) - s * a.apply({v3, v2})) < 1e-12);
  }
  CHECK_THROWS_AS(rand_tensor(rng, 4, 2).apply({Eigen::VectorXd::Zero(4)}),
                  std::invalid_argument);
}

TEST_CASE("wedge is bilinear, associative and graded-anticommutative") {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const int da = 1 + int(rng.uniform(0, 2));
    const int db = 1 + int(rng.uniform(0, 2));
    const AltTensor a = rand_tensor(rng, 6, da);
    const AltTensor b = rand_tensor(rng, 6, db);
    const AltTensor c = rand_tensor(rng, 6, 1);
    // associativity
    const AltTensor left = a.wedge(b).wedge(c);
    const AltTensor right = a.wedge(b.wedge(c));
    CHECK((left - right).norm() < 1e-12);
    // graded anticommutativity, exactly
    const double sign = (da * db) % 2 == 0 ? 1.0 : -1.0;
    CHECK((a.wedge(b) - Complex(sign, 0) * b.wedge(a)).norm() == 0.0);
    // conj distributes over wedge, exactly
    CHECK((conj(a.wedge(b)) - conj(a).wedge(conj(b))).norm() == 0.0);
    // bilinearity
    const Complex s(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const AltTensor a2 = rand_tensor(rng, 6, da);
    CHECK(((a + s * a2).wedge(b) - (a.wedge(b) + s * (a2.wedge(b)))).norm() < 1e-12);
    (void)c;
  }
  CHECK_THROWS_AS(rand_tensor(rng, 6, 1).wedge(rand_tensor(rng, 4, 1)),
                  std::invalid_argument);
}

TEST_CASE("exterior derivative pins") {
  FormField F(4, 1);
  F.add_term(MultiIndex{2}, ScalarField::coordinate(1, 4));  // x1 dx2
  const AltTensor d = F.d().eval(Eigen::VectorXd::Random(4));
  CHECK(d.coeff(MultiIndex{1, 2}) == Complex(1, 0));
  CHECK(d.terms().size() == 1);
}

TEST_CASE("d(alpha_1) is -i d(zw) ^ dwbar and nonzero at (1,0,1,0)") {
  const Coframe C = torus_coframe();
  Eigen::VectorXd p(4);
  p << 1, 0, 1, 0;
  const AltTensor got = C.alpha[0].d().eval(p);
  // oracle: -i (w dz + z dw) ^ dwbar at z = w = 1
  const AltTensor dz = FormField::dz(1, 4).eval(p);
  const AltTensor dw = FormField::dz(2, 4).eval(p);
  const AltTensor dwbar = FormField::dzbar(2, 4).eval(p);
  const AltTensor want = Complex(0, -1) * (dz + dw).wedge(dwbar);
  CHECK((got - want).norm() < 1e-14);
  CHECK(got.norm() > 0.5);
}

TEST_CASE("d . d = 0 on random expression-built forms") {
  test::ExprGen gen(41, 4);
  Rng rng(42);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 40; ++t) {
    try {
      const FormField F = rand_1form(rng, gen, 4);
      const FormField ddF = F.d().d();
      const Eigen::VectorXd p = rng.point(4, -1.5, 1.5);
      double scale = 1.0;
      for (const auto& [mask, f] : F.terms())
        scale = std::max(scale, f.eval(p).h.cwiseAbs().maxCoeff());
      CHECK(ddF.eval(p).norm() / scale <= 1e-8);
      ++checked;
    } catch (const EvalError&) {
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("Leibniz rule for d over wedge") {
  test::ExprGen gen(43, 4);
  Rng rng(44);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 20; ++t) {
    try {
      const FormField F = rand_1form(rng, gen, 4);
      const FormField G = rand_1form(rng, gen, 4);
      const Eigen::VectorXd p = rng.point(4, -1.5, 1.5);
      const AltTensor lhs = F.wedge(G).d().eval(p);
      // |F| = 1: d(F^G) = dF^G - F^dG
      const AltTensor rhs = F.d().eval(p).wedge(G.eval(p)) -
                            F.eval(p).wedge(G.d().eval(p));
      const double scale = std::max(1.0, lhs.norm());
      CHECK((lhs - rhs).norm() / scale < 1e-9);
      ++checked;
    } catch (const EvalError&) {
    }
  }
  CHECK(checked >= 15);
}

TEST_CASE("pullback pins along the torus") {
  const ParamSurface S = ParamSurface::torus4();
  // dz1 at (0,0) pulls back to i du
  const AltTensor pb = pullback(FormField::dz(1, 4), S, 0.0, 0.0);
  CHECK(std::abs(pb.coeff(MultiIndex{1}) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(pb.coeff(MultiIndex{2})) < 1e-15);

  // dz1 ^ dzbar1 pulls back to 0 everywhere
  const FormField zz = FormField::dz(1, 4).wedge(FormField::dzbar(1, 4));
  Rng rng(9);
  for (int t = 0; t < 25; ++t)
    CHECK(pullback(zz, S, rng.uniform(0, 6.28), rng.uniform(0, 6.28)).norm() < 1e-15);

  // alpha_1 pulls back to i e^{iu} (du + i dv) at 100 random parameters
  const Coframe C = torus_coframe();
  for (int t = 0; t < 100; ++t) {
    const double u = rng.uniform(0, 6.28), v = rng.uniform(0, 6.28);
    const AltTensor a = pullback(C.alpha[0], S, u, v);
    const Complex lead = Complex(0, 1) * std::exp(Complex(0, u));
    CHECK(std::abs(a.coeff(MultiIndex{1}) - lead) < 1e-13);
    CHECK(std::abs(a.coeff(MultiIndex{2}) - lead * Complex(0, 1)) < 1e-13);
  }

  // degree > 2 pulls back to zero on a 2-parameter surface
  const FormField top = FormField::dz(1, 4).wedge(FormField::dzbar(1, 4))
                            .wedge(FormField::dz(2, 4));
  CHECK(pullback(top, S, 0.3, 0.7).norm() == 0.0);
}

TEST_CASE("surface immersion margin and periodicity") {
  const ParamSurface S = ParamSurface::torus4();
  CHECK(S.immersion_margin(16) == doctest::Approx(1.0));
  CHECK(S.periodicity_defect(16) < 1e-12);
}

TEST_CASE("multi-index canonical form") {
  CHECK_THROWS_AS(MultiIndex({2, 2}), std::invalid_argument);
  CHECK(MultiIndex({3, 1}).indices() == std::vector<int>{1, 3});
  CHECK(MultiIndex({1, 3}).degree() == 2);
  CHECK(wedge_sign(MultiIndex({1}).bits, MultiIndex({2}).bits) == 1);
  CHECK(wedge_sign(MultiIndex({2}).bits, MultiIndex({1}).bits) == -1);
  CHECK(wedge_sign(MultiIndex({1, 4}).bits, MultiIndex({2, 3}).bits) == 1);
  CHECK(multiindex_name(MultiIndex{1, 3}) == "dx^{1,3}");
}

TEST_CASE("stored zeros are dropped") {
  AltTensor t(4, 1);
  t.add(MultiIndex{1}, Complex(1, 0));
  t.add(MultiIndex{1}, Complex(-1, 0));
  CHECK(t.terms().empty());
  CHECK(t.norm() == 0.0);
}
