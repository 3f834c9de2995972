#pragma once

#include <map>

#include "acg/exterior.hpp"
#include "acg/scalar_field.hpp"

namespace acg {

/// Differential form whose coefficients are scalar fields; evaluation at a
/// point yields an AltTensor. Supports wedge, conjugation and the
/// exterior derivative. Pure and immutable like its coefficients.
class FormField {
public:
  FormField(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<std::uint32_t, ScalarField>& terms() const { return c_; }

  void add_term(MultiIndex I, ScalarField coeff);

  AltTensor eval(const Eigen::VectorXd& p) const;

  FormField wedge(const FormField& other) const;
  FormField conjugated() const;

  /// Exterior derivative: d(f dx^I) = sum_k (df/dx_k) dx^k wedge dx^I.
  /// Coefficients must carry at least first derivatives.
  FormField d() const;

  /// Coefficient-wise multiplication by a scalar field / constant.
  FormField smul(const ScalarField& f) const;
  FormField cmul(Complex c) const;

  FormField& operator+=(const FormField& other);
  friend FormField operator+(FormField a, const FormField& b) { return a += b; }
  friend FormField operator-(const FormField& a, const FormField& b);

  /// Constant basis covector dx^k and complex combinations
  /// dz_k = dx^{2k-1} + I dx^{2k}, dzbar_k its conjugate.
  static FormField dx(int k, int dim);
  static FormField dz(int k, int dim);
  static FormField dzbar(int k, int dim);

  /// Degree-0 form wrapping a scalar field (so that df = scalar(f).d()).
  static FormField scalar(const ScalarField& f);

private:
  int dim_;
  int degree_;
  std::map<std::uint32_t, ScalarField> c_;
};

FormField conj(const FormField& F);

}  // namespace acg
