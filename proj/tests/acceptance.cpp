// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "bent/cli.hpp"
#include "bent/constructions.hpp"
#include "bent/criteria.hpp"
#include "bent/search.hpp"

using namespace bent;

namespace {

// Best objective of the pinned S3 run (seed 7, budget 1e5), frozen after the
// first run so that changes to the search show up here.
constexpr double kS3FrozenObjective = 0.29625186127426406;
constexpr double kFrozenTol = 1e-9;

using TablePtr = std::shared_ptr<const CharacterTable>;

TablePtr table(const Group& g) { return std::make_shared<const CharacterTable>(character_table(g)); }

Complex omega(long long k, int n) { return std::polar(1.0, 2.0 * M_PI * double(k % n) / n); }

double max_dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexVector scaled(ComplexVector g) {
  const double s = 1.0 / std::sqrt(double(g.size()));
  for (auto& z : g) z *= s;
  return g;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome ac1_tables() {
  double dev = 0.0;
  Eigen::MatrixXcd z3(3, 3);
  z3 << 1, 1, 1, 1, omega(1, 3), omega(2, 3), 1, omega(2, 3), omega(1, 3);
  dev = std::max(dev, max_dev(character_table(make_cyclic(3)).class_values(), z3));
  const Complex I(0, 1);
  Eigen::MatrixXcd z4(4, 4);
  z4 << 1, 1, 1, 1, 1, I, -1.0, -I, 1, -1.0, 1, -1.0, 1, -I, -1.0, I;
  dev = std::max(dev, max_dev(character_table(make_cyclic(4)).class_values(), z4));
  Eigen::MatrixXcd s3(3, 3);
  s3 << 1, 1, 1, 1, -1, 1, 2, 0, -1;
  dev = std::max(dev, max_dev(character_table(make_named("S3")).class_values(), s3));
  Eigen::MatrixXcd q8(5, 5);
  q8 << 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, 1, -1, 1, -1, 2, -2, 0, 0, 0;
  dev = std::max(dev, max_dev(character_table(make_named("Q8")).class_values(), q8));
  for (int n = 1; n <= 64; ++n) {
    Eigen::MatrixXcd zn(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) zn(i, k) = omega(static_cast<long long>(i) * k, n);
    dev = std::max(dev, max_dev(character_table(make_cyclic(n)).class_values(), zn));
  }
  return {dev < 1e-10, "max entry deviation " + sci(dev)};
}

Outcome ac2_orthogonality() {
  double dev = 0.0;
  auto one = [&](const Group& g) {
    const CharacterTable ct = character_table(g);
    const auto rep = verify_orthogonality(ct, 1e-10);
    dev = std::max({dev, rep.row_deviation, rep.column_deviation});
    if (g.is_abelian()) {
      const int n = g.order();
      const Eigen::MatrixXcd inv = ct.phi().adjoint() / double(n);
      dev = std::max(dev, max_dev(ct.phi() * inv, Eigen::MatrixXcd::Identity(n, n)));
    }
  };
  for (const char* name : {"S3", "Q8", "V4", "D4"}) one(make_named(name));
  for (int n = 1; n <= 64; ++n) one(make_cyclic(n));
  return {dev < 1e-10, "max deviation " + sci(dev)};
}

Outcome ac3_necessary() {
  double dev = 0.0;
  for (int n = 2; n <= 64; ++n)
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      const CertifiedFunction c = make_bent_cyclic({SequenceKind::kZadoffChu, n, u});
      for (const Complex& a : c.function.coefficients()) dev = std::max(dev, std::abs(std::norm(a) - 1.0 / n));
    }
  const double h = 1.0 / std::sqrt(2.0);
  const BentReport z2 = is_bent(ClassFunction::FromCoefficients(table(make_cyclic(2)), {h, h}));
  const bool counter = z2.verdict == Verdict::kNotUnimodular;
  return {dev < 1e-12 && counter,
          "max ||a_i|^2 - 1/n| " + sci(dev) + ", Z2 example " + to_string(z2.verdict)};
}

Outcome ac4_cyclic_iff() {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  long long cases = 0, agree = 0, positives = 0;
  for (int n = 2; n <= 12; ++n) {
    const TablePtr ct = table(make_cyclic(n));
    auto check = [&](const ComplexVector& a) {
      const bool oracle = is_bent(ClassFunction::FromCoefficients(ct, a), 1e-8).bent();
      ++cases;
      positives += oracle;
      agree += cyclic_criterion(a, 1e-8).satisfied == oracle;
    };
    for (int t = 0; t < 1000; ++t) {
      ComplexVector a(n);
      double norm = 0.0;
      for (auto& z : a) {
        z = {gauss(rng), gauss(rng)};
        norm += std::norm(z);
      }
      for (auto& z : a) z /= std::sqrt(norm);
      check(a);
      for (auto& z : a) z = std::polar(1.0 / std::sqrt(double(n)), angle(rng));
      check(a);
    }
    for (int u = 1; u < 2 * n; ++u)
      if (std::gcd(u, n) == 1) check(scaled(zadoff_chu(n, u)));
    if (n % 2) check(scaled(quadratic_chirp(n)));
  }
  return {agree == cases && positives > 0,
          std::to_string(agree) + "/" + std::to_string(cases) + " agree (" +
              std::to_string(positives) + " bent)"};
}

Outcome ac5_constructions() {
  int count = 0, ok = 0;
  double worst = 0.0;
  for (int n = 2; n <= 64; ++n)
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      ++count;
      const CertifiedFunction c = make_bent_cyclic({SequenceKind::kZadoffChu, n, u});
      double flat = 0.0;
      for (double s : spectrum(c.function)) flat = std::max(flat, std::abs(s - n));
      worst = std::max({worst, c.report.max_residual / n, flat / n});
      ok += c.report.bent() && c.report.max_residual < n * 1e-8 && flat <= n * 1e-8;
    }
  return {ok == count, std::to_string(ok) + "/" + std::to_string(count) +
                           " certified, worst normalised residual " + sci(worst)};
}

Outcome ac6_s3() {
  const S3Certificate c = s3_certificate(1e-12);
  const double residual = std::max({c.system_residual, c.magnitude_residual,
                                    std::abs(c.cross_term + 2.0 / 3.0)});
  const bool cert = residual < 1e-12 && c.contradiction && std::abs(c.cs_lhs - 2.0 / 3.0) < 1e-12 &&
                    std::abs(c.cs_rhs - 1.0 / 3.0) < 1e-12;
  SearchConfig sc;
  sc.group = "S3";
  sc.budget = 100000;
  sc.seed = 7;
  const SearchResult r = run_search(sc);
  const bool frozen = std::abs(r.best_objective - kS3FrozenObjective) <= kFrozenTol;
  const bool search = !r.certified_bent && r.best_objective > 1e-3 && frozen;
  char buf[160];
  std::snprintf(buf, sizeof buf, "certificate residual %.3e, CS %.6f > %.6f; search best %.12f (frozen %.12f)",
                residual, c.cs_lhs, c.cs_rhs, r.best_objective, kS3FrozenObjective);
  return {cert && search, buf};
}

Outcome ac7_q8() {
  const MagnitudeSolution sol = solve_q8_system();
  const double expected[5] = {2.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9, 1.0 / 9};
  double dev = 0.0;
  for (int i = 0; i < 5; ++i) dev = std::max(dev, std::abs(sol.magnitudes[i] - expected[i]));
  const auto& w = sol.magnitudes;
  // Rows for sigma = -1, i, j, k as printed.
  const double rows[4] = {w[0] + w[1] + w[2] + w[3] - 8 * w[4], w[0] + w[1] - w[2] - w[3],
                          w[0] - w[1] - w[2] + w[3], w[0] - w[1] + w[2] - w[3]};
  double eqs = 0.0;
  for (double r : rows) eqs = std::max(eqs, std::abs(r));
  return {dev < 1e-12 && sol.residual < 1e-12 && eqs < 1e-12,
          "solution deviation " + sci(dev) + ", system residual " + sci(sol.residual) +
              ", printed rows " + sci(eqs)};
}

Outcome ac8_invariance() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const TablePtr v4 = table(make_named("V4"));
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(unit(rng) * 15);
    ClassFunction base = trial % 4 == 0 ? ClassFunction::FromCoefficients(v4, {0.5, 0.5, 0.5, -0.5})
                                        : make_bent_cyclic({SequenceKind::kZadoffChu, n, 1}).function;
    bool kept = is_bent(base).bent();
    ClassFunction f = base;
    for (int kind = 0; kind < 3; ++kind) {
      Transform t;
      if (kind == 0) t = Transform::GlobalPhase(std::polar(1.0, 2 * M_PI * unit(rng)));
      if (kind == 1) t = Transform::Translate(static_cast<int>(unit(rng) * f.order()));
      if (kind == 2) t = Transform::CharacterTwist(static_cast<int>(unit(rng) * f.table().size()));
      kept = kept && is_bent(transform(base, t)).bent();
      f = transform(f, t);
    }
    ok += kept && is_bent(f).bent();
  }
  return {ok == 100, std::to_string(ok) + "/100 trials keep BENT"};
}

Outcome ac9_determinism() {
  std::ostringstream a, b, err;
  const int ca = run_cli({"verify-paper"}, a, err);
  const int cb = run_cli({"verify-paper"}, b, err);
  const bool same = a.str() == b.str() && !a.str().empty();
  return {same && ca == cb, std::string(same ? "identical" : "different") + " ledgers (" +
                                std::to_string(a.str().size()) + " bytes), exit " +
                                std::to_string(ca)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no runtime bound
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "character tables", 1.0, ac1_tables},
      {2, "orthogonality", 0.0, ac2_orthogonality},
      {3, "abelian necessary condition", 0.0, ac3_necessary},
      {4, "cyclic criterion iff oracle", 30.0, ac4_cyclic_iff},
      {5, "construction existence", 10.0, ac5_constructions},
      {6, "S3 impossibility", 0.0, ac6_s3},
      {7, "Q8 printed magnitudes", 0.0, ac7_q8},
      {8, "invariance", 0.0, ac8_invariance},
      {9, "determinism", 0.0, ac9_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("AC%d %s  %-28s %s; %.3f s%s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, in_time ? "" : " (over time limit)");
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
