#include "acg/form_field.hpp"

#include <stdexcept>

namespace acg {

FormField::FormField(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || dim > 32) throw std::invalid_argument("ambient dimension out of range");
  if (degree < 0 || degree > dim) throw std::invalid_argument("degree out of range");
}

void FormField::add_term(MultiIndex I, ScalarField coeff) {
  if (I.degree() != degree_) throw std::invalid_argument("multi-index degree mismatch");
  if (dim_ < 32 && (I.bits >> dim_) != 0)
    throw std::invalid_argument("multi-index exceeds dimension");
  if (coeff.dim() != dim_) throw std::invalid_argument("coefficient dimension mismatch");
  auto it = c_.find(I.bits);
  if (it == c_.end())
    c_.emplace(I.bits, std::move(coeff));
  else
    it->second = it->second + coeff;
}

AltTensor FormField::eval(const Eigen::VectorXd& p) const {
  AltTensor t(dim_, degree_);
  for (const auto& [k, f] : c_) t.add(MultiIndex(k), f.value(p));
  return t;
}

FormField FormField::wedge(const FormField& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("wedge: ambient dimension mismatch");
  FormField out(dim_, std::min(degree_ + other.degree_, dim_));
  if (degree_ + other.degree_ > dim_) return out;
  for (const auto& [ka, fa] : c_) {
    for (const auto& [kb, fb] : other.c_) {
      if (ka & kb) continue;
      const double s = wedge_sign(ka, kb);
      out.add_term(MultiIndex(ka | kb), Complex(s, 0.0) * (fa * fb));
    }
  }
  return out;
}

FormField FormField::conjugated() const {
  FormField out(dim_, degree_);
  for (const auto& [k, f] : c_) out.c_.emplace(k, conj(f));
  return out;
}

FormField conj(const FormField& F) { return F.conjugated(); }

FormField FormField::d() const {
  FormField out(dim_, degree_ + 1);
  for (const auto& [mask, f] : c_) {
    for (int k = 1; k <= dim_; ++k) {
      const std::uint32_t kb = 1u << (k - 1);
      if (mask & kb) continue;
      const double s = wedge_sign(kb, mask);
      out.add_term(MultiIndex(kb | mask), Complex(s, 0.0) * partial(f, k));
    }
  }
  return out;
}

FormField FormField::smul(const ScalarField& f) const {
  FormField out(dim_, degree_);
  for (const auto& [k, g] : c_) out.c_.emplace(k, f * g);
  return out;
}

FormField FormField::cmul(Complex c) const {
  FormField out(dim_, degree_);
  for (const auto& [k, g] : c_) out.c_.emplace(k, c * g);
  return out;
}

FormField& FormField::operator+=(const FormField& other) {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw std::invalid_argument("form sum: shape mismatch");
  for (const auto& [k, f] : other.c_) add_term(MultiIndex(k), f);
  return *this;
}

FormField operator-(const FormField& a, const FormField& b) {
  FormField out = a;
  out += b.cmul(Complex(-1.0, 0.0));
  return out;
}

FormField FormField::dx(int k, int dim) {
  FormField f(dim, 1);
  f.add_term(MultiIndex{k}, ScalarField::constant(Complex(1.0, 0.0), dim));
  return f;
}

FormField FormField::dz(int k, int dim) {
  FormField f(dim, 1);
  f.add_term(MultiIndex{2 * k - 1}, ScalarField::constant(Complex(1.0, 0.0), dim));
  f.add_term(MultiIndex{2 * k}, ScalarField::constant(Complex(0.0, 1.0), dim));
  return f;
}

FormField FormField::dzbar(int k, int dim) {
  FormField f(dim, 1);
  f.add_term(MultiIndex{2 * k - 1}, ScalarField::constant(Complex(1.0, 0.0), dim));
  f.add_term(MultiIndex{2 * k}, ScalarField::constant(Complex(0.0, -1.0), dim));
  return f;
}

FormField FormField::scalar(const ScalarField& f) {
  FormField out(f.dim(), 0);
  out.add_term(MultiIndex{}, f);
  return out;
}

}  // namespace acg
