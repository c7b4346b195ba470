#include "bent/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "bent/error.hpp"

namespace bent {

Complex root_of_unity(long long k, long long m) {
  k %= m;
  if (k < 0) k += m;
  if ((4 * k) % m == 0) {
    switch ((4 * k) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * k > m) return std::conj(root_of_unity(m - k, m));
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

CharacterTable::CharacterTable(std::shared_ptr<const Group> group, Eigen::MatrixXcd class_values)
    : group_(std::move(group)), class_values_(std::move(class_values)) {
  const int r = group_->num_classes();
  if (class_values_.rows() != r || class_values_.cols() != r) {
    throw InvalidInput("character table must be " + std::to_string(r) + "x" + std::to_string(r));
  }
  const int n = group_->order();
  phi_.resize(n, r);
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < r; ++i) phi_(x, i) = class_values_(i, group_->class_of(x));
  degrees_.resize(r);
  for (int i = 0; i < r; ++i)
    degrees_[i] = static_cast<int>(std::lround(class_values_(i, 0).real()));
}

ComplexVector CharacterTable::character(int i) const {
  if (i < 0 || i >= size()) throw IndexError("character index out of range: " + std::to_string(i));
  ComplexVector out(order());
  for (int x = 0; x < order(); ++x) out[x] = phi_(x, i);
  return out;
}

namespace {

Eigen::MatrixXcd abelian_class_values(const Group& g) {
  const auto& factors = g.abelian_factors();
  const int n = g.order();
  long long m = 1;
  for (int f : factors) m = std::lcm(m, static_cast<long long>(f));

  auto decode = [&](int x) {
    std::vector<int> t(factors.size());
    for (size_t j = factors.size(); j-- > 0;) {
      t[j] = x % factors[j];
      x /= factors[j];
    }
    return t;
  };

  // Classes are singletons in element order, so class c is element c.
  Eigen::MatrixXcd values(n, n);
  for (int i = 0; i < n; ++i) {
    const auto ti = decode(i);
    for (int x = 0; x < n; ++x) {
      const auto tx = decode(x);
      long long k = 0;
      for (size_t j = 0; j < factors.size(); ++j)
        k += static_cast<long long>(ti[j]) * tx[j] * (m / factors[j]);
      values(i, x) = root_of_unity(k, m);
    }
  }
  return values;
}

double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-10 ? r + 0.0 : v;
}

// Lexicographic key with values rounded so that numerical noise does not
// decide the order.
std::vector<long long> row_key(const Eigen::MatrixXcd& values, int row) {
  std::vector<long long> key;
  key.push_back(std::llround(values(row, 0).real()));
  for (int c = 0; c < values.cols(); ++c) {
    key.push_back(std::llround(values(row, c).real() * 1e9));
    key.push_back(std::llround(values(row, c).imag() * 1e9));
  }
  return key;
}

bool is_trivial_row(const Eigen::MatrixXcd& values, int row) {
  for (int c = 0; c < values.cols(); ++c)
    if (std::abs(values(row, c) - 1.0) > 1e-8) return false;
  return true;
}

Eigen::MatrixXcd sort_rows(const Eigen::MatrixXcd& values) {
  std::vector<int> order(values.rows());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const bool ta = is_trivial_row(values, a), tb = is_trivial_row(values, b);
    if (ta != tb) return ta;
    return row_key(values, a) < row_key(values, b);
  });
  Eigen::MatrixXcd out(values.rows(), values.cols());
  for (int i = 0; i < values.rows(); ++i) out.row(i) = values.row(order[i]);
  return out;
}

// Reorders `computed` to the row order of `reference`; throws if any
// reference row has no computed match within tol.
Eigen::MatrixXcd match_reference(const Eigen::MatrixXcd& computed,
                                 const Eigen::MatrixXcd& reference, const std::string& name,
                                 double tol) {
  if (computed.rows() != reference.rows() || computed.cols() != reference.cols()) {
    throw IntegrityError("computed table for " + name + " has the wrong shape");
  }
  Eigen::MatrixXcd out(reference.rows(), reference.cols());
  std::vector<bool> used(computed.rows(), false);
  for (int i = 0; i < reference.rows(); ++i) {
    int found = -1;
    for (int j = 0; j < computed.rows() && found < 0; ++j) {
      if (used[j]) continue;
      if ((computed.row(j) - reference.row(i)).cwiseAbs().maxCoeff() <= tol) found = j;
    }
    if (found < 0) {
      throw IntegrityError("class-sum character table for " + name +
                           " does not match the reference table at row " + std::to_string(i));
    }
    used[found] = true;
    out.row(i) = computed.row(found);
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd burnside_class_values(const Group& g) {
  const int n = g.order();
  const int r = g.num_classes();
  const auto& reps = g.class_reps();
  const auto& sizes = g.class_sizes();

  // coeff[i][j][k] = #{x in C_i : x^-1 g_k in C_j}, i.e. the multiplicity of
  // C_k in the class-sum product C_i C_j.
  std::vector<Eigen::MatrixXd> mult(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int x : g.classes()[i]) {
      const int xinv = g.inverse(x);
      for (int k = 0; k < r; ++k) mult[i](g.class_of(g.mul(xinv, reps[k])), k) += 1.0;
    }

  // Central characters w satisfy mult[i] w = w_i w for every i; a generic
  // combination of the mult[i] has them as its only eigenvectors.
  std::mt19937_64 rng(0xC1A55);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  std::string failure;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
    std::vector<double> weights(r);
    for (int i = 0; i < r; ++i) {
      weights[i] = coef(rng);
      combo += weights[i] * mult[i];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<Complex>());
    if (solver.info() != Eigen::Success) {
      failure = "eigen solver did not converge";
      continue;
    }
    const auto& lambda = solver.eigenvalues();
    const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    std::vector<std::pair<int, int>> clashes;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (std::abs(lambda[a] - lambda[b]) < 1e-7 * scale) clashes.emplace_back(a, b);
    if (!clashes.empty()) {
      std::ostringstream msg;
      msg << "class sums";
      for (int i = 0; i < r; ++i) msg << ' ' << g.label(reps[i]);
      msg << " do not separate eigenvectors";
      for (auto [a, b] : clashes) msg << " (" << a << "," << b << ")";
      failure = msg.str();
      continue;
    }

    Eigen::MatrixXcd values(r, r);
    bool ok = true;
    for (int e = 0; e < r && ok; ++e) {
      Eigen::VectorXcd w = solver.eigenvectors().col(e);
      if (std::abs(w[0]) < 1e-12) {
        failure = "eigenvector with zero identity component";
        ok = false;
        break;
      }
      w /= w[0];
      double norm = 0.0;
      for (int k = 0; k < r; ++k) norm += std::norm(w[k]) / sizes[k];
      const double degree = std::sqrt(n / norm);
      if (std::abs(degree - std::round(degree)) > 1e-6) {
        throw NumericDegeneracy("non-integral character degree " + std::to_string(degree) +
                                " in class-sum computation for " + g.name());
      }
      const double d = std::round(degree);
      for (int k = 0; k < r; ++k) {
        const Complex v = d * w[k] / static_cast<double>(sizes[k]);
        values(e, k) = {snap(v.real()), snap(v.imag())};
      }
    }
    if (ok) return sort_rows(values);
  }
  throw NumericDegeneracy("class-sum method failed for " + g.name() + ": " + failure);
}

std::optional<Eigen::MatrixXcd> reference_class_values(const std::string& catalog_name) {
  auto real_table = [](std::initializer_list<std::initializer_list<double>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(r, r);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      Eigen::Index c = 0;
      for (double v : row) m(i, c++) = v;
      ++i;
    }
    return m;
  };
  if (catalog_name == "S3") {
    // Classes I, (12), (123).
    return real_table({{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});
  }
  if (catalog_name == "Q8") {
    // Classes 1, -1, i, j, k.
    return real_table({{1, 1, 1, 1, 1},
                       {1, 1, 1, -1, -1},
                       {1, 1, -1, -1, 1},
                       {1, 1, -1, 1, -1},
                       {2, -2, 0, 0, 0}});
  }
  if (catalog_name == "D4") {
    // Classes e, {r, r3}, r2, {s, r2s}, {rs, r3s}.
    return real_table({{1, 1, 1, 1, 1},
                       {1, -1, 1, -1, 1},
                       {1, -1, 1, 1, -1},
                       {1, 1, 1, -1, -1},
                       {2, 0, -2, 0, 0}});
  }
  if (catalog_name == "V4") {
    // Elements (0,0), (0,1), (1,0), (1,1).
    return real_table({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
  }
  return std::nullopt;
}

CharacterTable character_table(std::shared_ptr<const Group> g) {
  if (!g->abelian_factors().empty()) return CharacterTable(g, abelian_class_values(*g));

  const auto reference = reference_class_values(g->catalog_name());
  if (reference) {
    const Eigen::MatrixXcd computed = burnside_class_values(*g);
    return CharacterTable(g, match_reference(computed, *reference, g->name(), 1e-8));
  }
  if (!g->is_abelian()) {
    throw CapabilityError("character tables of nonabelian groups are only available for the "
                          "catalog (S3, Q8, D4); '" + g->name() + "' is not one of them");
  }
  return CharacterTable(g, burnside_class_values(*g));
}

CharacterTable character_table(const Group& g) {
  return character_table(std::make_shared<const Group>(g));
}

OrthogonalityReport verify_orthogonality(const Group& g, const Eigen::MatrixXcd& class_values,
                                         double tol) {
  const int r = static_cast<int>(class_values.rows());
  const auto& sizes = g.class_sizes();
  const double n = g.order();
  OrthogonalityReport rep;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Complex s = 0.0;
      for (int c = 0; c < r; ++c)
        s += static_cast<double>(sizes[c]) * class_values(i, c) * std::conj(class_values(j, c));
      s /= n;
      rep.row_deviation = std::max(rep.row_deviation, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      Complex s = 0.0;
      for (int i = 0; i < r; ++i) s += class_values(i, x) * std::conj(class_values(i, y));
      const double expected = x == y ? n / sizes[x] : 0.0;
      rep.column_deviation = std::max(rep.column_deviation, std::abs(s - expected));
    }
  rep.pass = rep.row_deviation < tol && rep.column_deviation < tol;
  return rep;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& ct, double tol) {
  return verify_orthogonality(ct.group(), ct.class_values(), tol);
}

Complex inner_product(const CharacterTable& ct, std::span<const Complex> u,
                      std::span<const Complex> v) {
  const auto n = static_cast<size_t>(ct.order());
  if (u.size() != n || v.size() != n) {
    throw InvalidInput("inner_product expects vectors of length " + std::to_string(n));
  }
  Complex s = 0.0;
  for (size_t x = 0; x < n; ++x) s += u[x] * std::conj(v[x]);
  return s / static_cast<double>(n);
}

}  // namespace bent
