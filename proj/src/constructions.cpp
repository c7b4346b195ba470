#include "bent/constructions.hpp"

#include <cmath>
#include <numeric>

#include "bent/error.hpp"

namespace bent {

ComplexVector zadoff_chu(int n, int u) {
  if (n < 1) throw InvalidInput("sequence length must be positive");
  if (std::gcd(u, n) != 1) {
    throw InvalidInput("Zadoff-Chu root " + std::to_string(u) + " is not coprime to length " +
                       std::to_string(n));
  }
  ComplexVector g(n);
  const long long ln = n, lu = u;
  for (long long k = 0; k < ln; ++k) {
    if (n % 2 == 1) {
      // k(k+1) is even, so the angle is a multiple of 2 pi / n.
      g[k] = root_of_unity(-lu * ((k * (k + 1) / 2) % ln), ln);
    } else {
      g[k] = root_of_unity(-lu * ((k * k) % (2 * ln)), 2 * ln);
    }
  }
  return g;
}

ComplexVector quadratic_chirp(int n) {
  if (n < 1 || n % 2 == 0) {
    throw InvalidInput("quadratic chirp needs an odd length, got " + std::to_string(n));
  }
  ComplexVector g(n);
  for (long long k = 0; k < n; ++k) g[k] = root_of_unity((k * k) % n, n);
  return g;
}

CertifiedFunction make_bent_cyclic(const SequenceSpec& spec, double tol) {
  const ComplexVector g = spec.kind == SequenceKind::kZadoffChu ? zadoff_chu(spec.n, spec.root)
                                                                : quadratic_chirp(spec.n);
  auto ct = std::make_shared<const CharacterTable>(character_table(make_cyclic(spec.n)));
  ComplexVector a(g.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec.n));
  for (size_t k = 0; k < g.size(); ++k) a[k] = g[k] * scale;

  ClassFunction f = ClassFunction::FromCoefficients(ct, std::move(a));
  BentReport report = is_bent(f, tol);
  if (!report.bent()) {
    throw IntegrityError("construction on Z" + std::to_string(spec.n) + " failed its bentness check (" +
                         to_string(report.verdict) + ", max residual " +
                         std::to_string(report.max_residual) + ")");
  }
  return {std::move(f), std::move(report)};
}

ClassFunction transform(const ClassFunction& f, const Transform& t) {
  const Group& g = f.group();
  ComplexVector values = f.values();
  switch (t.kind) {
    case Transform::Kind::kGlobalPhase:
      if (std::abs(std::abs(t.phase) - 1.0) > 1e-12) {
        throw InvalidInput("global phase must have modulus 1");
      }
      for (auto& v : values) v *= t.phase;
      break;
    case Transform::Kind::kTranslate: {
      if (t.element < 0 || t.element >= g.order()) {
        throw IndexError("translation element out of range: " + std::to_string(t.element));
      }
      for (int x = 0; x < g.order(); ++x) values[x] = f(g.mul(t.element, x));
      break;
    }
    case Transform::Kind::kCharacterTwist: {
      const CharacterTable& ct = f.table();
      if (t.character < 0 || t.character >= ct.size()) {
        throw IndexError("character index out of range: " + std::to_string(t.character));
      }
      if (!ct.is_linear(t.character)) {
        throw CapabilityError("character twist needs a one-dimensional character; chi_" +
                              std::to_string(t.character + 1) + " has degree " +
                              std::to_string(ct.degrees()[t.character]));
      }
      for (int x = 0; x < g.order(); ++x) values[x] *= ct.value(t.character, x);
      break;
    }
  }
  return ClassFunction::FromValues(f.table_ptr(), std::move(values));
}

}  // namespace bent
