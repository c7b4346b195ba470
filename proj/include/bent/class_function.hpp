#pragma once

#include <memory>
#include <span>

#include "bent/char_table.hpp"

namespace bent {

// Tolerance for "constant on conjugacy classes" when pointwise values are
// supplied directly.
inline constexpr double kClassConstancyTol = 1e-9;
inline constexpr double kDefaultTol = 1e-8;

// A class function f: G -> C held both as character-basis coefficients
// (a_1..a_r) and as pointwise values. Both are computed at construction and
// never change afterwards.
class ClassFunction {
 public:
  static ClassFunction FromCoefficients(std::shared_ptr<const CharacterTable> ct,
                                        ComplexVector coeffs);
  // Throws ClassConstancyError naming the first class whose values differ by
  // more than kClassConstancyTol.
  static ClassFunction FromValues(std::shared_ptr<const CharacterTable> ct, ComplexVector values);

  const CharacterTable& table() const { return *table_; }
  const std::shared_ptr<const CharacterTable>& table_ptr() const { return table_; }
  const Group& group() const { return table_->group(); }
  int order() const { return table_->order(); }

  const ComplexVector& coefficients() const { return coeffs_; }
  const ComplexVector& values() const { return values_; }
  Complex operator()(int x) const { return values_[x]; }

  // max_x |values[x] - sum_i coeffs[i] chi_i(x)|.
  double sync_residual() const { return sync_residual_; }

 private:
  ClassFunction(std::shared_ptr<const CharacterTable> ct, ComplexVector coeffs,
                ComplexVector values);

  std::shared_ptr<const CharacterTable> table_;
  ComplexVector coeffs_;
  ComplexVector values_;
  double sync_residual_ = 0.0;
};

// Pointwise values phi * a.
ComplexVector from_coefficients(const CharacterTable& ct, std::span<const Complex> a);
// a_i = <f, chi_i>; checks class constancy first.
ComplexVector to_coefficients(const CharacterTable& ct, std::span<const Complex> values);

struct UnimodularCheck {
  bool unimodular = false;
  double max_deviation = 0.0;  // max_x ||f(x)| - 1|
};
UnimodularCheck is_unimodular(const ClassFunction& f, double tol = kDefaultTol);
double unimodular_deviation(std::span<const Complex> values);

}  // namespace bent
