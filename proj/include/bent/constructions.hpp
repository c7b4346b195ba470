#pragma once

#include "bent/bent_check.hpp"
#include "bent/class_function.hpp"

namespace bent {

enum class SequenceKind { kZadoffChu, kQuadraticChirp };

struct SequenceSpec {
  SequenceKind kind = SequenceKind::kZadoffChu;
  int n = 1;
  int root = 1;  // Zadoff-Chu only; must be coprime to n.
};

// g_k = exp(-i pi u k(k+1)/n) for odd n, exp(-i pi u k^2/n) for even n.
// Throws InvalidInput when gcd(u, n) != 1.
ComplexVector zadoff_chu(int n, int u);

// g_k = w^(k^2), w = exp(2 pi i/n), odd n only.
ComplexVector quadratic_chirp(int n);

struct CertifiedFunction {
  ClassFunction function;
  BentReport report;
};

// Class function on Z_n with coefficients g/sqrt(n). Re-checks itself with
// is_bent and throws IntegrityError if the check does not come back BENT.
CertifiedFunction make_bent_cyclic(const SequenceSpec& spec, double tol = kDefaultTol);

struct Transform {
  enum class Kind { kGlobalPhase, kTranslate, kCharacterTwist };
  Kind kind = Kind::kGlobalPhase;
  Complex phase = 1.0;  // kGlobalPhase, |phase| = 1
  int element = 0;      // kTranslate
  int character = 0;    // kCharacterTwist, 0-based row of the table

  static Transform GlobalPhase(Complex c) { return {Kind::kGlobalPhase, c, 0, 0}; }
  static Transform Translate(int tau) { return {Kind::kTranslate, 1.0, tau, 0}; }
  static Transform CharacterTwist(int i) { return {Kind::kCharacterTwist, 1.0, 0, i}; }
};

// c f, x -> f(tau x), or f chi_i. Translating by a non-central element of a
// nonabelian group throws ClassConstancyError; twisting by a character of
// degree >= 2 throws CapabilityError.
ClassFunction transform(const ClassFunction& f, const Transform& t);

}  // namespace bent
