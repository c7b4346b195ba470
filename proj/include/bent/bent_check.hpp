#pragma once

#include <span>
#include <string>
#include <vector>

#include "bent/class_function.hpp"

namespace bent {

enum class Verdict { kBent, kNotBent, kNotUnimodular };

const char* to_string(Verdict v);

// Outcome of the derivative-sum test.
//
// residuals[k] is D(sigma) = sum_x conj(f(x)) f(sigma x) for the k-th
// non-identity element sigma in ascending index order. right_residuals uses
// f(x sigma) instead; for a class function sigma x and x sigma are
// conjugate, so the two lists agree, but both are kept so that the
// left/right convention is visible in reports on nonabelian groups.
struct BentReport {
  std::string group;
  std::vector<int> directions;
  ComplexVector residuals;
  ComplexVector right_residuals;
  double max_residual = 0.0;
  double right_max_residual = 0.0;
  double unimodular_deviation = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::kNotBent;
  // Verdict from right translates; only differs from `verdict` if the two
  // conventions disagree.
  Verdict right_verdict = Verdict::kNotBent;

  bool bent() const { return verdict == Verdict::kBent; }
};

// sum_x conj(f(x)) f(sigma x), summed in ascending element order.
Complex derivative_sum(const ClassFunction& f, int sigma);
Complex derivative_sum(const Group& g, std::span<const Complex> values, int sigma);
// sum_x conj(f(x)) f(x sigma).
Complex right_derivative_sum(const Group& g, std::span<const Complex> values, int sigma);

// BENT iff unimodular_deviation <= tol and max_residual <= n * tol;
// NOT_UNIMODULAR is reported before residuals are considered.
BentReport is_bent(const ClassFunction& f, double tol = kDefaultTol);

// |f^(chi_i)|^2 with f^(chi) = sum_x f(x) conj(chi(x)). Abelian groups only.
std::vector<double> spectrum(const ClassFunction& f);

// Unimodular within tol and max_i ||f^(chi_i)|^2 - n| <= n * tol.
bool is_bent_spectral(const ClassFunction& f, double tol = kDefaultTol);

}  // namespace bent
