#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

namespace acg {

/// Octonion over the basis e0..e7, e0 the unit. The multiplication table
/// is generated by the Cayley-Dickson doubling of the quaternions
/// span(e0..e3) with e4 = (0,1): e1 e2 = e3, e1 e4 = e5, e2 e4 = e6,
/// e3 e4 = e7, signs completed by (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct Octonion {
  std::array<double, 8> c{};

  Octonion() = default;
  static Octonion unit(int k) {
    Octonion o;
    o.c[k] = 1.0;
    return o;
  }
  static Octonion imaginary(const Eigen::VectorXd& v7) {
    Octonion o;
    for (int i = 0; i < 7; ++i) o.c[i + 1] = v7[i];
    return o;
  }

  double norm() const;
  double real() const { return c[0]; }
  Eigen::VectorXd imag() const;  // components on e1..e7

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator*(double s) const;
};

Octonion octonion_mul(const Octonion& a, const Octonion& b);

/// Signed basis product e_i e_j = sign * e_k.
struct BasisProduct {
  int sign;
  int index;
};

/// The full 8 x 8 table of signed basis products.
const std::array<std::array<BasisProduct, 8>, 8>& octonion_table();

/// CSV rendering of the table, one "i,j,sign,k" row per product
/// (the audit artifact shipped under docs/).
std::string octonion_table_csv();

}  // namespace acg
