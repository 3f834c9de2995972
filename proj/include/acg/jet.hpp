#pragma once

#include <Eigen/Dense>
#include <complex>

namespace acg {

using Complex = std::complex<double>;

/// Second-order forward-mode jet: value, gradient and Hessian of a
/// complex-valued function with respect to the 2n real coordinates.
/// The Hessian stays symmetric exactly because every rule below only
/// ever adds symmetric terms (a*b^T always appears with its transpose).
struct Jet {
  Complex v{0.0, 0.0};
  Eigen::VectorXcd g;
  Eigen::MatrixXcd h;

  Jet() = default;
  explicit Jet(int dim)
      : g(Eigen::VectorXcd::Zero(dim)), h(Eigen::MatrixXcd::Zero(dim, dim)) {}

  int dim() const { return static_cast<int>(g.size()); }

  static Jet constant(Complex c, int dim) {
    Jet j(dim);
    j.v = c;
    return j;
  }

  /// Jet of the real coordinate x_k (k zero-based here).
  static Jet coordinate(double x, int k, int dim) {
    Jet j(dim);
    j.v = Complex(x, 0.0);
    j.g[k] = 1.0;
    return j;
  }
};

/// Exact symmetrization; outer-product terms can pick up one-ulp
/// asymmetry under FMA contraction, and the symmetry contract is exact.
inline void symmetrize(Eigen::MatrixXcd& h) {
  h = (0.5 * (h + h.transpose())).eval();
}

/// Integer power by repeated multiplication; 0^0 = 1 by convention.
inline Complex ipow(Complex base, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.dim());
  r.v = a.v + b.v;
  r.g = a.g + b.g;
  r.h = a.h + b.h;
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r(a.dim());
  r.v = a.v - b.v;
  r.g = a.g - b.g;
  r.h = a.h - b.h;
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r(a.dim());
  r.v = -a.v;
  r.g = -a.g;
  r.h = -a.h;
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.dim());
  r.v = a.v * b.v;
  r.g = a.v * b.g + b.v * a.g;
  r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
  symmetrize(r.h);
  return r;
}

inline Jet operator*(Complex c, const Jet& a) {
  Jet r(a.dim());
  r.v = c * a.v;
  r.g = c * a.g;
  r.h = c * a.h;
  return r;
}

/// 1/b. Caller must reject b.v == 0 beforehand.
inline Jet jet_inv(const Jet& b) {
  Jet r(b.dim());
  const Complex w = 1.0 / b.v;
  const Complex w2 = w * w;
  const Complex w3 = w2 * w;
  r.v = w;
  r.g = -w2 * b.g;
  r.h = -w2 * b.h + 2.0 * w3 * (b.g * b.g.transpose());
  symmetrize(r.h);
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * jet_inv(b); }

/// Chain rule through a scalar function with u0 = phi(v), u1 = phi'(v),
/// u2 = phi''(v).
inline Jet jet_chain(const Jet& f, Complex u0, Complex u1, Complex u2) {
  Jet r(f.dim());
  r.v = u0;
  r.g = u1 * f.g;
  r.h = u1 * f.h + u2 * (f.g * f.g.transpose());
  symmetrize(r.h);
  return r;
}

inline Jet jet_exp(const Jet& f) {
  const Complex e = std::exp(f.v);
  return jet_chain(f, e, e, e);
}

inline Jet jet_sin(const Jet& f) {
  const Complex s = std::sin(f.v), c = std::cos(f.v);
  return jet_chain(f, s, c, -s);
}

inline Jet jet_cos(const Jet& f) {
  const Complex s = std::sin(f.v), c = std::cos(f.v);
  return jet_chain(f, c, -s, -c);
}

/// Conjugation commutes with real-coordinate derivatives:
/// d(conj f)/dx_k = conj(df/dx_k).
inline Jet jet_conj(const Jet& f) {
  Jet r(f.dim());
  r.v = std::conj(f.v);
  r.g = f.g.conjugate();
  r.h = f.h.conjugate();
  return r;
}

inline Jet jet_re(const Jet& f) {
  Jet r(f.dim());
  r.v = Complex(f.v.real(), 0.0);
  r.g = f.g.real().cast<Complex>();
  r.h = f.h.real().cast<Complex>();
  return r;
}

inline Jet jet_im(const Jet& f) {
  Jet r(f.dim());
  r.v = Complex(f.v.imag(), 0.0);
  r.g = f.g.imag().cast<Complex>();
  r.h = f.h.imag().cast<Complex>();
  return r;
}

/// f^n for integer n >= 0. Negative exponents go through jet_inv at the
/// call site so the zero-base check can name the subexpression.
inline Jet jet_pow(const Jet& f, int n) {
  if (n == 0) return Jet::constant(Complex(1.0, 0.0), f.dim());
  if (n == 1) return f;
  const Complex u0 = ipow(f.v, n);
  const Complex u1 = double(n) * ipow(f.v, n - 1);
  const Complex u2 = double(n) * double(n - 1) * ipow(f.v, n - 2);
  return jet_chain(f, u0, u1, u2);
}

}  // namespace acg
