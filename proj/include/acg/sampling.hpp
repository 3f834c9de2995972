#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace acg {

/// Radical-inverse (Halton) low-discrepancy sequence; deterministic by
/// construction, used for sweeps that must reproduce bit-exactly.
inline double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, x = 0.0;
  while (i) {
    x += f * double(i % base);
    i /= base;
    f *= inv;
  }
  return x;
}

inline Eigen::VectorXd halton_point(std::uint64_t i, int dim, double lo, double hi) {
  static constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  Eigen::VectorXd p(dim);
  for (int k = 0; k < dim; ++k)
    p[k] = lo + (hi - lo) * radical_inverse(i + 1, primes[k]);
  return p;
}

/// Deterministic uniform doubles from a fixed-seed mt19937_64; avoids the
/// implementation-defined std::uniform_real_distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    const double u = std::ldexp(double(gen_() >> 11), -53);
    return lo + (hi - lo) * u;
  }

  Eigen::VectorXd point(int dim, double lo, double hi) {
    Eigen::VectorXd p(dim);
    for (int k = 0; k < dim; ++k) p[k] = uniform(lo, hi);
    return p;
  }

  /// Point of R^{2m} with every complex coordinate in the annulus
  /// radius in [r_lo, r_hi] (keeps clear of coordinate zero sets).
  Eigen::VectorXd annulus_point(int m, double r_lo, double r_hi) {
    Eigen::VectorXd p(2 * m);
    for (int k = 0; k < m; ++k) {
      const double r = uniform(r_lo, r_hi);
      const double a = uniform(0.0, 2.0 * 3.14159265358979323846);
      p[2 * k] = r * std::cos(a);
      p[2 * k + 1] = r * std::sin(a);
    }
    return p;
  }

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

}  // namespace acg
