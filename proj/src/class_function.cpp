#include "bent/class_function.hpp"

#include <algorithm>
#include <cmath>

#include "bent/error.hpp"

namespace bent {

namespace {

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

ComplexVector from_coefficients(const CharacterTable& ct, std::span<const Complex> a) {
  const int r = ct.size();
  if (a.size() != static_cast<size_t>(r)) {
    throw InvalidInput("expected " + std::to_string(r) + " coefficients, got " +
                       std::to_string(a.size()));
  }
  const auto& phi = ct.phi();
  ComplexVector values(ct.order());
  for (int x = 0; x < ct.order(); ++x) {
    Complex s = 0.0;
    for (int i = 0; i < r; ++i) s += a[i] * phi(x, i);
    values[x] = s;
  }
  return values;
}

ComplexVector to_coefficients(const CharacterTable& ct, std::span<const Complex> values) {
  const Group& g = ct.group();
  if (values.size() != static_cast<size_t>(g.order())) {
    throw InvalidInput("expected " + std::to_string(g.order()) + " pointwise values, got " +
                       std::to_string(values.size()));
  }
  for (int c = 0; c < g.num_classes(); ++c) {
    const Complex ref = values[g.class_reps()[c]];
    for (int x : g.classes()[c]) {
      if (std::abs(values[x] - ref) > kClassConstancyTol) {
        throw ClassConstancyError("values are not constant on the conjugacy class of " +
                                  g.label(g.class_reps()[c]) + " (element " + g.label(x) +
                                  " differs by " + std::to_string(std::abs(values[x] - ref)) + ")");
      }
    }
  }
  const int r = ct.size();
  ComplexVector a(r);
  for (int i = 0; i < r; ++i) {
    Complex s = 0.0;
    for (int x = 0; x < g.order(); ++x) s += values[x] * std::conj(ct.phi()(x, i));
    a[i] = s / static_cast<double>(g.order());
  }
  return a;
}

ClassFunction::ClassFunction(std::shared_ptr<const CharacterTable> ct, ComplexVector coeffs,
                             ComplexVector values)
    : table_(std::move(ct)), coeffs_(std::move(coeffs)), values_(std::move(values)) {
  sync_residual_ = max_abs_diff(values_, from_coefficients(*table_, coeffs_));
}

ClassFunction ClassFunction::FromCoefficients(std::shared_ptr<const CharacterTable> ct,
                                              ComplexVector coeffs) {
  ComplexVector values = from_coefficients(*ct, coeffs);
  return ClassFunction(std::move(ct), std::move(coeffs), std::move(values));
}

ClassFunction ClassFunction::FromValues(std::shared_ptr<const CharacterTable> ct,
                                        ComplexVector values) {
  ComplexVector coeffs = to_coefficients(*ct, values);
  return ClassFunction(std::move(ct), std::move(coeffs), std::move(values));
}

double unimodular_deviation(std::span<const Complex> values) {
  double dev = 0.0;
  for (const Complex& v : values) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
  return dev;
}

UnimodularCheck is_unimodular(const ClassFunction& f, double tol) {
  const double dev = unimodular_deviation(f.values());
  return {dev <= tol, dev};
}

}  // namespace bent
