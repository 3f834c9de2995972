#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "acg/jet.hpp"

namespace acg {

/// Strictly increasing multi-index over coordinates 1..2n, stored as a bit
/// mask (bit k-1 set <=> dx^k present). The mask is the canonical
/// representative; shuffle signs are computed by the operations.
struct MultiIndex {
  std::uint32_t bits = 0;

  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t b) : bits(b) {}
  MultiIndex(std::initializer_list<int> idx) {
    for (int k : idx) {
      if (k < 1 || k > 32) throw std::invalid_argument("multi-index entry out of range");
      const std::uint32_t bit = 1u << (k - 1);
      if (bits & bit) throw std::invalid_argument("multi-index entries must be distinct");
      bits |= bit;
    }
  }

  int degree() const { return std::popcount(bits); }
  bool contains(int k) const { return bits & (1u << (k - 1)); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int k = 1; k <= 32; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }

  auto operator<=>(const MultiIndex&) const = default;
};

/// Sign of dx^A wedge dx^B for disjoint masks: parity of the number of
/// pairs (a in A, b in B) with a > b.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  std::uint32_t rest = a;
  while (rest) {
    const int bit = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(b & ((1u << bit) - 1u));
  }
  return (inversions & 1) ? -1 : 1;
}

std::string multiindex_name(MultiIndex I);  // e.g. "dx^{1,3}"

/// Element of the complexified exterior algebra at a point: complex
/// coefficients over the canonical multi-index basis. Exact zeros are
/// dropped from storage.
class AltTensor {
public:
  AltTensor(int dim, int degree);

  static AltTensor basis(int dim, MultiIndex I, Complex coeff = Complex(1.0, 0.0));

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<std::uint32_t, Complex>& terms() const { return c_; }

  Complex coeff(MultiIndex I) const;
  void add(MultiIndex I, Complex c);

  AltTensor wedge(const AltTensor& other) const;
  AltTensor conjugated() const;

  /// Full antisymmetrized evaluation on `degree` real vectors.
  Complex apply(const std::vector<Eigen::VectorXd>& vectors) const;

  /// l2 norm of the coefficient vector.
  double norm() const;

  AltTensor& operator+=(const AltTensor& other);
  AltTensor& operator-=(const AltTensor& other);
  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
  friend AltTensor operator*(Complex c, const AltTensor& a);

  std::string str() const;

private:
  void prune(std::uint32_t key);

  int dim_;
  int degree_;
  std::map<std::uint32_t, Complex> c_;
};

AltTensor conj(const AltTensor& a);

}  // namespace acg
