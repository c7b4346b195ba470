#include "bent/criteria.hpp"

#include <cmath>
#include <functional>

#include "bent/error.hpp"

namespace bent {

namespace {

void require_length(std::span<const Complex> a, size_t n, const char* what) {
  if (a.size() != n) {
    throw InvalidInput(std::string(what) + " expects " + std::to_string(n) + " coefficients, got " +
                       std::to_string(a.size()));
  }
}

void record(CriterionOutcome& out, std::string equation, double residual) {
  if (residual > out.tol) out.violations.push_back({std::move(equation), residual});
}

std::string idx(int i) { return std::to_string(i + 1); }

}  // namespace

CriterionOutcome abelian_magnitude_necessary(std::span<const Complex> a, double tol) {
  if (a.empty()) throw InvalidInput("abelian_magnitude_necessary expects at least one coefficient");
  CriterionOutcome out{"abelian-magnitude", false, {}, tol};
  const double target = 1.0 / static_cast<double>(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    record(out, "|a_" + idx(static_cast<int>(i)) + "|^2 = 1/" + std::to_string(a.size()),
           std::abs(std::norm(a[i]) - target));
  out.satisfied = out.violations.empty();
  return out;
}

std::vector<double> solve_abelian_magnitudes(const CharacterTable& ct) {
  const auto& phi = ct.phi();
  if (phi.rows() != phi.cols()) {
    throw CapabilityError("Phi is not square for " + ct.group().name() +
                          "; the magnitude system needs an abelian group");
  }
  const int n = ct.order();
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
  y[ct.group().identity()] = 1.0;
  const Eigen::VectorXcd w = phi.adjoint() * y / static_cast<double>(n);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(w[i].imag()) > 1e-12) throw IntegrityError("complex magnitude in Phi solve");
    out[i] = w[i].real();
  }
  return out;
}

Complex cyclic_lag_sum(std::span<const Complex> a, int k) {
  const auto n = a.size();
  Complex s = 0.0;
  for (size_t i = 0; i < n; ++i) s += std::conj(a[i]) * a[(i + static_cast<size_t>(k)) % n];
  return s;
}

CriterionOutcome cyclic_criterion(std::span<const Complex> a, double tol) {
  if (a.size() < 2) throw InvalidInput("cyclic_criterion needs n >= 2 coefficients");
  CriterionOutcome out{"cyclic", false, {}, tol};
  const int n = static_cast<int>(a.size());
  const double target = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i)
    record(out, "|a_" + idx(i) + "| = 1/sqrt(" + std::to_string(n) + ")",
           std::abs(std::abs(a[i]) - target));
  for (int k = 1; k <= n / 2; ++k)
    record(out, "lag " + std::to_string(k) + ": sum conj(a_i) a_(i+" + std::to_string(k) + ") = 0",
           std::abs(cyclic_lag_sum(a, k)));
  out.satisfied = out.violations.empty();
  return out;
}

std::array<Complex, 3> klein_sums(std::span<const Complex> a) {
  require_length(a, 4, "klein_criterion");
  auto cj = [](Complex z) { return std::conj(z); };
  return {cj(a[0]) * a[1] + cj(a[2]) * a[3] + cj(a[1]) * a[0] + cj(a[3]) * a[2],
          cj(a[0]) * a[2] + cj(a[1]) * a[3] + cj(a[2]) * a[0] + cj(a[3]) * a[1],
          cj(a[0]) * a[2] + cj(a[2]) * a[0] + cj(a[1]) * a[3] + cj(a[3]) * a[1]};
}

CriterionOutcome klein_criterion(std::span<const Complex> a, double tol) {
  require_length(a, 4, "klein_criterion");
  CriterionOutcome out{"klein", false, {}, tol};
  for (int i = 0; i < 4; ++i)
    record(out, "|a_" + idx(i) + "| = 1/2", std::abs(std::abs(a[i]) - 0.5));
  const auto sums = klein_sums(a);
  const char* labels[3] = {
      "conj(a1)a2 + conj(a3)a4 + conj(a2)a1 + conj(a4)a3 = 0",
      "conj(a1)a3 + conj(a2)a4 + conj(a3)a1 + conj(a4)a2 = 0",
      "conj(a1)a3 + conj(a3)a1 + conj(a2)a4 + conj(a4)a2 = 0",
  };
  for (int k = 0; k < 3; ++k) record(out, labels[k], std::abs(sums[k]));
  out.satisfied = out.violations.empty();
  return out;
}

LinearSystem5 q8_printed_system() {
  LinearSystem5 sys;
  sys.matrix << 1, 1, 1, 1, -8,  //
      1, 1, -1, -1, 0,           //
      1, -1, -1, 1, 0,           //
      1, -1, 1, -1, 0,           //
      1, 1, 1, 1, 1;
  sys.rhs << 0, 0, 0, 0, 1;
  sys.labels = {"sigma=-1: w1+w2+w3+w4-8w5 = 0", "sigma=i: w1+w2-w3-w4 = 0",
                "sigma=j: w1-w2-w3+w4 = 0", "sigma=k: w1-w2+w3-w4 = 0",
                "normalisation: w1+w2+w3+w4+w5 = 1"};
  return sys;
}

MagnitudeSolution solve_q8_system() {
  const LinearSystem5 sys = q8_printed_system();
  Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(sys.matrix);
  if (!lu.isInvertible()) throw IntegrityError("Q8 magnitude system is singular");
  const Eigen::Matrix<double, 5, 1> w = lu.solve(sys.rhs);
  MagnitudeSolution sol;
  sol.magnitudes.assign(w.data(), w.data() + 5);
  sol.residual = (sys.matrix * w - sys.rhs).cwiseAbs().maxCoeff();
  return sol;
}

CriterionOutcome q8_necessary(std::span<const Complex> a, double tol) {
  require_length(a, 5, "q8_necessary");
  CriterionOutcome out{"q8-magnitudes", false, {}, tol};
  for (int i = 0; i < 4; ++i)
    record(out, "|a_" + idx(i) + "|^2 = 2/9", std::abs(std::norm(a[i]) - 2.0 / 9.0));
  record(out, "|a_5|^2 = 1/9", std::abs(std::norm(a[4]) - 1.0 / 9.0));
  out.satisfied = out.violations.empty();
  return out;
}

MagnitudeSolution derived_magnitude_system(const CharacterTable& ct) {
  const int r = ct.size();
  const int rows = 2 * (r - 1) + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, r);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
  for (int c = 1; c < r; ++c)
    for (int i = 0; i < r; ++i) {
      const Complex v = ct.class_values()(i, c) / static_cast<double>(ct.degrees()[i]);
      A(2 * (c - 1), i) = v.real();
      A(2 * (c - 1) + 1, i) = v.imag();
    }
  A.row(rows - 1).setOnes();
  b[rows - 1] = 1.0;
  const Eigen::VectorXd w = A.colPivHouseholderQr().solve(b);
  MagnitudeSolution sol;
  sol.magnitudes.assign(w.data(), w.data() + r);
  sol.residual = (A * w - b).cwiseAbs().maxCoeff();
  return sol;
}

namespace {

// Values F = f(I), T = f(transposition), C = f(3-cycle) for coefficients on
// the characters (1,1,1), (1,-1,1), (2,0,-1).
struct S3Values {
  Complex F, T, C;
};

S3Values s3_values(std::span<const Complex> a) {
  require_length(a, 3, "S3 expansion");
  return {a[0] + a[1] + 2.0 * a[2], a[0] - a[1], a[0] + a[1] - a[2]};
}

using QuadraticForm = std::function<Complex(std::span<const Complex>)>;

// Recovers H with q(a) = a^H H a by polarisation on basis vectors.
Eigen::Matrix3cd hermitian_form(const QuadraticForm& q) {
  auto eval = [&](Complex x, Complex y, Complex z) {
    const std::array<Complex, 3> v{x, y, z};
    return q(v).real();
  };
  auto basis = [](int j, Complex s) {
    std::array<Complex, 3> v{};
    v[j] = s;
    return v;
  };
  Eigen::Matrix3cd H = Eigen::Matrix3cd::Zero();
  for (int j = 0; j < 3; ++j) {
    const auto e = basis(j, 1.0);
    H(j, j) = eval(e[0], e[1], e[2]);
  }
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k) {
      std::array<Complex, 3> sum{}, isum{};
      sum[j] = 1.0;
      sum[k] = 1.0;
      isum[j] = 1.0;
      isum[k] = Complex(0.0, 1.0);
      const double hjj = H(j, j).real(), hkk = H(k, k).real();
      const double re = (eval(sum[0], sum[1], sum[2]) - hjj - hkk) / 2.0;
      const double im = (hjj + hkk - eval(isum[0], isum[1], isum[2])) / 2.0;
      H(j, k) = {re, im};
      H(k, j) = std::conj(H(j, k));
    }
  return H;
}

double max_off_diagonal(const Eigen::Matrix3cd& H) {
  double m = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      if (j != k) m = std::max(m, std::abs(H(j, k)));
  return m;
}

}  // namespace

Complex s3_transposition_expansion(std::span<const Complex> a) {
  const auto [F, T, C] = s3_values(a);
  return std::conj(F) * T + std::conj(T) * F + 2.0 * std::conj(T) * C + 2.0 * std::conj(C) * T;
}

Complex s3_three_cycle_expansion(std::span<const Complex> a) {
  const auto [F, T, C] = s3_values(a);
  return std::conj(F) * C + std::conj(C) * F + 3.0 * std::conj(T) * T + std::conj(C) * C;
}

S3Certificate s3_certificate(double tol) {
  S3Certificate cert;
  cert.tol = tol;

  // sum_x |f(x)|^2 = |F|^2 + 3|T|^2 + 2|C|^2 over the class sizes 1, 3, 2.
  const QuadraticForm norm = [](std::span<const Complex> a) {
    const auto [F, T, C] = s3_values(a);
    return Complex(std::norm(F) + 3.0 * std::norm(T) + 2.0 * std::norm(C), 0.0);
  };
  const QuadraticForm transposition_value = [](std::span<const Complex> a) {
    return Complex(std::norm(s3_values(a).T), 0.0);
  };

  const Eigen::Matrix3cd h_trans = hermitian_form(s3_transposition_expansion);
  const Eigen::Matrix3cd h_cycle = hermitian_form(s3_three_cycle_expansion);
  const Eigen::Matrix3cd h_norm = hermitian_form(norm);
  cert.cross_coupling = std::max({max_off_diagonal(h_trans), max_off_diagonal(h_cycle),
                                  max_off_diagonal(h_norm)});

  Eigen::Matrix3d A;
  Eigen::Vector3d b(0.0, 0.0, 6.0);
  for (int j = 0; j < 3; ++j) {
    A(0, j) = h_trans(j, j).real();
    A(1, j) = h_cycle(j, j).real();
    A(2, j) = h_norm(j, j).real();
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu(A);
  if (!lu.isInvertible()) throw IntegrityError("S3 magnitude system is singular");
  const Eigen::Vector3d w = lu.solve(b);
  cert.system_residual = (A * w - b).cwiseAbs().maxCoeff();
  for (int j = 0; j < 3; ++j) cert.magnitudes[j] = w[j];
  const double expected[3] = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
  for (int j = 0; j < 3; ++j)
    cert.magnitude_residual = std::max(cert.magnitude_residual, std::abs(w[j] - expected[j]));
  cert.ratio_check = 2.0 * (w[0] + w[1]) - w[2];

  // |f((12))|^2 = 1 with f((12)) = a1 - a2:
  // h11 w1 + h22 w2 + 2 Re(h12 conj(a1) a2) = 1, and h12 is real.
  const Eigen::Matrix3cd h_t = hermitian_form(transposition_value);
  const double diag_part = h_t(0, 0).real() * w[0] + h_t(1, 1).real() * w[1];
  cert.cross_term = (1.0 - diag_part) / h_t(0, 1).real();

  cert.cs_lhs = std::abs(cert.cross_term);
  cert.cs_rhs = std::sqrt(w[0] + w[1]) * std::sqrt(w[1] + w[0]);
  cert.contradiction = cert.cs_lhs > cert.cs_rhs;
  return cert;
}

}  // namespace bent
