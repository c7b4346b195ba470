#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bent/group.hpp"

namespace bent {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// exp(2*pi*i*k/m) with exact values at quarter turns and exactly conjugate
// results for k and m-k.
Complex root_of_unity(long long k, long long m);

// Irreducible characters of a group.
//
// Rows are characters, columns are conjugacy classes in the group's class
// order. Row 0 is always the trivial character. Abelian groups built from
// cyclic factors order their characters by exponent tuple (the same
// mixed-radix encoding as the elements); catalog groups follow their
// reference table; anything else is sorted by (degree, values on class
// representatives).
class CharacterTable {
 public:
  // Wraps precomputed class values. No orthogonality check is made here; use
  // verify_orthogonality.
  CharacterTable(std::shared_ptr<const Group> group, Eigen::MatrixXcd class_values);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }

  // Number of irreducible characters r.
  int size() const { return static_cast<int>(class_values_.rows()); }
  int order() const { return group_->order(); }

  // r x r, entry (i, c) = chi_i on the representative of class c.
  const Eigen::MatrixXcd& class_values() const { return class_values_; }
  // n x r, entry (x, i) = chi_i(g_x).
  const Eigen::MatrixXcd& phi() const { return phi_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int root_order() const { return group_->exponent(); }

  Complex value(int character, int element) const { return phi_(element, character); }
  ComplexVector character(int i) const;
  bool is_linear(int i) const { return degrees_.at(i) == 1; }

 private:
  std::shared_ptr<const Group> group_;
  Eigen::MatrixXcd class_values_;
  Eigen::MatrixXcd phi_;
  std::vector<int> degrees_;
};

// Analytic path for groups carrying cyclic factors, class-sum path otherwise.
// Catalog groups are checked against their reference table (entrywise within
// 1e-8 up to row order) and throw IntegrityError on mismatch. Throws
// CapabilityError for nonabelian groups outside the catalog.
CharacterTable character_table(std::shared_ptr<const Group> g);
CharacterTable character_table(const Group& g);

// Characters from simultaneous eigenvectors of the class-multiplication
// matrices. Trivial row first, remaining rows sorted by (degree, values).
Eigen::MatrixXcd burnside_class_values(const Group& g);

// Built-in tables for "S3", "Q8", "D4" and "V4".
std::optional<Eigen::MatrixXcd> reference_class_values(const std::string& catalog_name);

struct OrthogonalityReport {
  double row_deviation = 0.0;
  double column_deviation = 0.0;
  bool pass = false;
};

// Row relation (1/n) sum_x chi_i(x) conj(chi_j(x)) = delta_ij and the column
// relation sum_i chi_i(x) conj(chi_i(y)) = delta * n/|class(x)|.
OrthogonalityReport verify_orthogonality(const Group& g, const Eigen::MatrixXcd& class_values,
                                         double tol);
OrthogonalityReport verify_orthogonality(const CharacterTable& ct, double tol);

// <u, v> = (1/n) sum_x u(x) conj(v(x)) over pointwise vectors.
Complex inner_product(const CharacterTable& ct, std::span<const Complex> u,
                      std::span<const Complex> v);

}  // namespace bent
