#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bent/char_table.hpp"
#include "bent/class_function.hpp"

namespace bent {

// Coefficient-space conditions for bentness, evaluated exactly as they are
// stated in the source derivations. Ground truth is always the brute-force
// derivative-sum test in bent_check; these functions are what gets checked
// against it.

struct Violation {
  std::string equation;
  double residual = 0.0;
};

struct CriterionOutcome {
  std::string name;
  bool satisfied = false;
  std::vector<Violation> violations;
  double tol = 0.0;
};

// ||a_i|^2 - 1/n| <= tol for every i.
CriterionOutcome abelian_magnitude_necessary(std::span<const Complex> a, double tol = kDefaultTol);

// Solves Phi w = y, y = indicator of the identity, through the inverse
// (1/n) conj(Phi)^T. Abelian tables only (Phi must be square).
std::vector<double> solve_abelian_magnitudes(const CharacterTable& ct);

// Z_n: |a_i| = 1/sqrt(n) and, for k = 1..floor(n/2), the cyclic lag sum
// sum_i conj(a_i) a_{i+k} (indices mod n) vanishes.
CriterionOutcome cyclic_criterion(std::span<const Complex> a, double tol = kDefaultTol);
Complex cyclic_lag_sum(std::span<const Complex> a, int k);

// V4 with the three displayed bilinear sums as printed (the second and third
// coincide up to term order).
CriterionOutcome klein_criterion(std::span<const Complex> a, double tol = kDefaultTol);
// The three bilinear sums in printed order.
std::array<Complex, 3> klein_sums(std::span<const Complex> a);

// Q8, characters ordered as in the reference table.
//
// Rows of the printed system in the squared magnitudes w_1..w_5, one per
// direction class (-1, i, j, k) plus the normalisation sum w_i = 1.
struct LinearSystem5 {
  Eigen::Matrix<double, 5, 5> matrix;
  Eigen::Matrix<double, 5, 1> rhs;
  std::array<std::string, 5> labels;
};
LinearSystem5 q8_printed_system();

struct MagnitudeSolution {
  std::vector<double> magnitudes;  // w_i = |a_i|^2
  double residual = 0.0;           // max |A w - b|
};
// Unique solution of q8_printed_system(); throws IntegrityError if singular.
MagnitudeSolution solve_q8_system();
CriterionOutcome q8_necessary(std::span<const Complex> a, double tol = kDefaultTol);

// Squared magnitudes forced on any bent class function by the character
// table itself: for every non-identity class rep s,
// sum_i w_i chi_i(s) / chi_i(e) = 0, plus sum_i w_i = 1. Least squares; the
// residual shows whether the system is consistent.
MagnitudeSolution derived_magnitude_system(const CharacterTable& ct);

// S3 nonexistence argument, re-derived numerically.
struct S3Certificate {
  std::array<double, 3> magnitudes{};  // |a_1|^2, |a_2|^2, |a_3|^2
  double cross_term = 0.0;             // conj(a1) a2 + conj(a2) a1
  double cs_lhs = 0.0;                 // |<(a1,a2),(a2,a1)>|
  double cs_rhs = 0.0;                 // ||(a1,a2)|| ||(a2,a1)||
  bool contradiction = false;
  // Largest off-diagonal entry of the Hermitian forms behind the two
  // direction equations; zero means they only involve |a_i|^2.
  double cross_coupling = 0.0;
  // max |A w - b| of the 3x3 magnitude system.
  double system_residual = 0.0;
  // Deviation of the solution from (1/6, 1/6, 2/3).
  double magnitude_residual = 0.0;
  // 2(w1 + w2) - w3 at the solution.
  double ratio_check = 0.0;
  double tol = 0.0;
};

// Printed expansions for S3 in terms of a = (a1, a2, a3) and the values
// F = f(I), T = f((12)), C = f((123)).
Complex s3_transposition_expansion(std::span<const Complex> a);
Complex s3_three_cycle_expansion(std::span<const Complex> a);

S3Certificate s3_certificate(double tol = 1e-12);

}  // namespace bent
