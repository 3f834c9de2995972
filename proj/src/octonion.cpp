#include "acg/octonion.hpp"

#include <cmath>
#include <sstream>

namespace acg {

namespace {

// 4-vector quaternion arithmetic over basis (1, i, j, k); enough to run
// the Cayley-Dickson doubling once at startup.
using Quat = std::array<double, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat qsub(const Quat& a, const Quat& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Quat qadd(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

std::array<std::array<BasisProduct, 8>, 8> build_table() {
  std::array<std::array<BasisProduct, 8>, 8> table{};
  auto unit_pair = [](int t) {
    // e_t as a quaternion pair (a, b)
    std::pair<Quat, Quat> p{{0, 0, 0, 0}, {0, 0, 0, 0}};
    if (t < 4)
      p.first[t] = 1.0;
    else
      p.second[t - 4] = 1.0;
    return p;
  };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto [a, b] = unit_pair(i);
      const auto [c, d] = unit_pair(j);
      // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
      const Quat first = qsub(qmul(a, c), qmul(qconj(d), b));
      const Quat second = qadd(qmul(d, a), qmul(b, qconj(c)));
      int sign = 0, index = -1;
      for (int t = 0; t < 4; ++t) {
        if (first[t] != 0.0) {
          sign = first[t] > 0 ? 1 : -1;
          index = t;
        }
        if (second[t] != 0.0) {
          sign = second[t] > 0 ? 1 : -1;
          index = t + 4;
        }
      }
      table[i][j] = {sign, index};
    }
  }
  return table;
}

}  // namespace

const std::array<std::array<BasisProduct, 8>, 8>& octonion_table() {
  static const auto table = build_table();
  return table;
}

double Octonion::norm() const {
  double s = 0.0;
  for (double x : c) s += x * x;
  return std::sqrt(s);
}

Eigen::VectorXd Octonion::imag() const {
  Eigen::VectorXd v(7);
  for (int i = 0; i < 7; ++i) v[i] = c[i + 1];
  return v;
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Octonion Octonion::operator*(double s) const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
  return r;
}

Octonion octonion_mul(const Octonion& a, const Octonion& b) {
  const auto& table = octonion_table();
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j] == 0.0) continue;
      const BasisProduct p = table[i][j];
      r.c[p.index] += p.sign * a.c[i] * b.c[j];
    }
  }
  return r;
}

std::string octonion_table_csv() {
  std::ostringstream os;
  os << "i,j,sign,k\n";
  const auto& table = octonion_table();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      os << i << ',' << j << ',' << table[i][j].sign << ',' << table[i][j].index << '\n';
  return os.str();
}

}  // namespace acg
