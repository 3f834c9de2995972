#include "acg/exterior.hpp"

#include <sstream>
#include <stdexcept>

namespace acg {

std::string multiindex_name(MultiIndex I) {
  std::ostringstream os;
  os << "dx^{";
  bool first = true;
  for (int k : I.indices()) {
    if (!first) os << ',';
    os << k;
    first = false;
  }
  os << '}';
  return os.str();
}

AltTensor::AltTensor(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || dim > 32) throw std::invalid_argument("ambient dimension out of range");
  if (degree < 0 || degree > dim) throw std::invalid_argument("degree out of range");
}

AltTensor AltTensor::basis(int dim, MultiIndex I, Complex coeff) {
  AltTensor t(dim, I.degree());
  t.add(I, coeff);
  return t;
}

Complex AltTensor::coeff(MultiIndex I) const {
  auto it = c_.find(I.bits);
  return it == c_.end() ? Complex(0.0, 0.0) : it->second;
}

void AltTensor::prune(std::uint32_t key) {
  auto it = c_.find(key);
  if (it != c_.end() && it->second == Complex(0.0, 0.0)) c_.erase(it);
}

void AltTensor::add(MultiIndex I, Complex c) {
  if (I.degree() != degree_) throw std::invalid_argument("multi-index degree mismatch");
  if (dim_ < 32 && (I.bits >> dim_) != 0)
    throw std::invalid_argument("multi-index exceeds dimension");
  c_[I.bits] += c;
  prune(I.bits);
}

AltTensor AltTensor::wedge(const AltTensor& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("wedge: ambient dimension mismatch");
  if (degree_ + other.degree_ > dim_) return AltTensor(dim_, std::min(degree_ + other.degree_, dim_));
  AltTensor out(dim_, degree_ + other.degree_);
  for (const auto& [ka, va] : c_) {
    for (const auto& [kb, vb] : other.c_) {
      if (ka & kb) continue;
      const Complex c = va * vb * double(wedge_sign(ka, kb));
      out.c_[ka | kb] += c;
    }
  }
  for (auto it = out.c_.begin(); it != out.c_.end();)
    it = (it->second == Complex(0.0, 0.0)) ? out.c_.erase(it) : std::next(it);
  return out;
}

AltTensor AltTensor::conjugated() const {
  AltTensor out(dim_, degree_);
  for (const auto& [k, v] : c_) out.c_[k] = std::conj(v);
  return out;
}

AltTensor conj(const AltTensor& a) { return a.conjugated(); }

Complex AltTensor::apply(const std::vector<Eigen::VectorXd>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw std::invalid_argument("apply: arity mismatch");
  for (const auto& v : vectors)
    if (v.size() != dim_) throw std::invalid_argument("apply: vector dimension mismatch");
  if (degree_ == 0) return c_.count(0) ? c_.at(0) : Complex(0.0, 0.0);
  Complex total(0.0, 0.0);
  Eigen::MatrixXd m(degree_, degree_);
  for (const auto& [k, coeff] : c_) {
    const auto idx = MultiIndex(k).indices();
    for (int a = 0; a < degree_; ++a)
      for (int b = 0; b < degree_; ++b) m(a, b) = vectors[b][idx[a] - 1];
    total += coeff * m.determinant();
  }
  return total;
}

double AltTensor::norm() const {
  double s = 0.0;
  for (const auto& [k, v] : c_) s += std::norm(v);
  return std::sqrt(s);
}

AltTensor& AltTensor::operator+=(const AltTensor& other) {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw std::invalid_argument("tensor sum: shape mismatch");
  for (const auto& [k, v] : other.c_) {
    c_[k] += v;
    prune(k);
  }
  return *this;
}

AltTensor& AltTensor::operator-=(const AltTensor& other) {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw std::invalid_argument("tensor difference: shape mismatch");
  for (const auto& [k, v] : other.c_) {
    c_[k] -= v;
    prune(k);
  }
  return *this;
}

AltTensor operator*(Complex c, const AltTensor& a) {
  AltTensor out(a.dim_, a.degree_);
  if (c == Complex(0.0, 0.0)) return out;
  for (const auto& [k, v] : a.c_) out.c_[k] = c * v;
  return out;
}

std::string AltTensor::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
    if (degree_ > 0) os << "*" << multiindex_name(MultiIndex(k));
    first = false;
  }
  return os.str();
}

}  // namespace acg
