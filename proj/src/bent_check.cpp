#include "bent/bent_check.hpp"

#include <algorithm>
#include <cmath>

#include "bent/error.hpp"

namespace bent {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kBent: return "BENT";
    case Verdict::kNotBent: return "NOT_BENT";
    case Verdict::kNotUnimodular: return "NOT_UNIMODULAR";
  }
  return "?";
}

namespace {

void check_direction(const Group& g, int sigma) {
  if (sigma < 0 || sigma >= g.order()) {
    throw IndexError("direction " + std::to_string(sigma) + " out of range for " + g.name());
  }
}

Verdict decide(double unimodular_dev, double max_residual, int n, double tol) {
  if (unimodular_dev > tol) return Verdict::kNotUnimodular;
  return max_residual <= n * tol ? Verdict::kBent : Verdict::kNotBent;
}

}  // namespace

Complex derivative_sum(const Group& g, std::span<const Complex> values, int sigma) {
  check_direction(g, sigma);
  Complex s = 0.0;
  for (int x = 0; x < g.order(); ++x) s += std::conj(values[x]) * values[g.mul(sigma, x)];
  return s;
}

Complex right_derivative_sum(const Group& g, std::span<const Complex> values, int sigma) {
  check_direction(g, sigma);
  Complex s = 0.0;
  for (int x = 0; x < g.order(); ++x) s += std::conj(values[x]) * values[g.mul(x, sigma)];
  return s;
}

Complex derivative_sum(const ClassFunction& f, int sigma) {
  return derivative_sum(f.group(), f.values(), sigma);
}

BentReport is_bent(const ClassFunction& f, double tol) {
  const Group& g = f.group();
  BentReport rep;
  rep.group = g.name();
  rep.tol = tol;
  rep.unimodular_deviation = unimodular_deviation(f.values());
  for (int sigma = 0; sigma < g.order(); ++sigma) {
    if (sigma == g.identity()) continue;
    rep.directions.push_back(sigma);
    rep.residuals.push_back(derivative_sum(g, f.values(), sigma));
    rep.right_residuals.push_back(right_derivative_sum(g, f.values(), sigma));
    rep.max_residual = std::max(rep.max_residual, std::abs(rep.residuals.back()));
    rep.right_max_residual = std::max(rep.right_max_residual, std::abs(rep.right_residuals.back()));
  }
  rep.verdict = decide(rep.unimodular_deviation, rep.max_residual, g.order(), tol);
  rep.right_verdict = decide(rep.unimodular_deviation, rep.right_max_residual, g.order(), tol);
  return rep;
}

std::vector<double> spectrum(const ClassFunction& f) {
  const Group& g = f.group();
  if (!g.is_abelian()) {
    throw CapabilityError("Fourier spectrum requires an abelian group; " + g.name() + " is not");
  }
  const auto& phi = f.table().phi();
  std::vector<double> out(f.table().size());
  for (int i = 0; i < f.table().size(); ++i) {
    Complex s = 0.0;
    for (int x = 0; x < g.order(); ++x) s += f(x) * std::conj(phi(x, i));
    out[i] = std::norm(s);
  }
  return out;
}

bool is_bent_spectral(const ClassFunction& f, double tol) {
  const auto spec = spectrum(f);
  if (unimodular_deviation(f.values()) > tol) return false;
  const double n = f.order();
  double dev = 0.0;
  for (double s : spec) dev = std::max(dev, std::abs(s - n));
  return dev <= n * tol;
}

}  // namespace bent
