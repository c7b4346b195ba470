#include "bent/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include "bent/constructions.hpp"
#include "bent/error.hpp"

namespace bent {

const char* to_string(LedgerStatus s) {
  switch (s) {
    case LedgerStatus::kPass: return "PASS";
    case LedgerStatus::kFail: return "FAIL";
    case LedgerStatus::kEvidence: return "EVIDENCE";
    case LedgerStatus::kSkipped: return "SKIPPED";
  }
  return "FAIL";
}

int PaperLedger::count(LedgerStatus s) const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
}

bool PaperLedger::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const auto& e) {
    return e.gating && e.status == LedgerStatus::kFail;
  });
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

using TablePtr = std::shared_ptr<const CharacterTable>;

TablePtr table_for(const Group& g) { return std::make_shared<const CharacterTable>(character_table(g)); }
TablePtr table_for(const std::string& label) { return table_for(group_from_label(label)); }

// Same stream construction as the search, so the ledger depends only on the
// seed and never on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  int below(int n) { return static_cast<int>(uniform() * n); }
  double normal() {
    const double u = 1.0 - uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

ComplexVector random_coeffs(int r, Rng& rng) {
  ComplexVector a(r);
  double norm = 0.0;
  for (auto& z : a) {
    z = {rng.normal(), rng.normal()};
    norm += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm);
  return a;
}

// |a_i| = 1/sqrt(r), random phases: passes the magnitude part of every
// necessary condition, so the lag conditions have to do the work.
ComplexVector random_flat_coeffs(int r, Rng& rng) {
  ComplexVector a(r);
  for (auto& z : a) z = std::polar(1.0 / std::sqrt(static_cast<double>(r)), 2.0 * M_PI * rng.uniform());
  return a;
}

ComplexVector scaled(const ComplexVector& g) {
  ComplexVector a(g);
  const double s = 1.0 / std::sqrt(static_cast<double>(g.size()));
  for (auto& z : a) z *= s;
  return a;
}

class Verifier {
 public:
  explicit Verifier(const VerifyConfig& c) : c_(c) {}

  PaperLedger run() {
    ledger_.config = c_;
    gate("character-tables", "printed character tables of Z3, Z4, S3, Q8 and the Z_n formula",
         [&](LedgerEntry& e) { tables(e); });
    gate("orthogonality", "row and column orthogonality, inverse of Phi for abelian groups",
         [&](LedgerEntry& e) { orthogonality(e); });
    gate("derivative-sum", "definition of the derivative of f in direction sigma",
         [&](LedgerEntry& e) { derivative(e); });
    gate("bent-iff", "bentness through vanishing derivative sums",
         [&](LedgerEntry& e) { bent_iff(e); });
    gate("abelian-necessary", "abelian necessary condition |a_i|^2 = 1/n and its linear system",
         [&](LedgerEntry& e) { abelian_necessary(e); });
    gate("z2-counterexample", "Z2 example with a_i = 1/sqrt(2), not a map into S^1",
         [&](LedgerEntry& e) { z2_counterexample(e); });
    gate("cyclic-z3-z4", "propositions on Z3 and Z4", [&](LedgerEntry& e) { cyclic_small(e); });
    gate("cyclic-theorem", "general cyclic theorem, odd and even n",
         [&](LedgerEntry& e) { cyclic_theorem(e); });
    gate("constructions", "Zadoff-Chu and quadratic chirp witnesses on Z_n, n <= 64",
         [&](LedgerEntry& e) { constructions(e); });
    evidence("klein-remark", "remark on Klein's four group V4", false,
             [&](LedgerEntry& e) { klein(e); });
    gate("s3-certificate", "S3 nonexistence proposition and its Cauchy-Schwarz step",
         [&](LedgerEntry& e) { s3_cert(e); });
    evidence("s3-search", "S3 nonexistence, numerical search", true,
             [&](LedgerEntry& e) { s3_search(e); });
    gate("q8-printed-system", "Q8 magnitude system and its solution 2/9, 1/9",
         [&](LedgerEntry& e) { q8_system(e); });
    evidence("q8-existence", "existence of bent class functions on Q8", true,
             [&](LedgerEntry& e) { q8_existence(e); });
    evidence("z2-existence", "existence of bent class functions on Z2", false,
             [&](LedgerEntry& e) { z2_existence(e); });
    gate("invariance", "global phase, translation and character twist",
         [&](LedgerEntry& e) { invariance(e); });
    return std::move(ledger_);
  }

 private:
  using Check = std::function<void(LedgerEntry&)>;

  // Deterministic check: PASS iff the body leaves no failure behind.
  void gate(const std::string& id, const std::string& location, const Check& body) {
    LedgerEntry e{id, location, LedgerStatus::kPass, true, 0.0, ""};
    try {
      body(e);
    } catch (const std::exception& ex) {
      e.status = LedgerStatus::kFail;
      e.detail = std::string("error: ") + ex.what();
    }
    ledger_.entries.push_back(std::move(e));
  }

  // Evidence entry. `uses_search` entries are SKIPPED at budget 0. The body
  // may still set FAIL and mark the entry gating (a contradiction event).
  void evidence(const std::string& id, const std::string& location, bool uses_search,
                const Check& body) {
    LedgerEntry e{id, location, LedgerStatus::kEvidence, false, 0.0, ""};
    if (uses_search && c_.budget <= 0) {
      e.status = LedgerStatus::kSkipped;
      e.detail = "search budget is 0";
      ledger_.entries.push_back(std::move(e));
      return;
    }
    try {
      body(e);
    } catch (const std::exception& ex) {
      e.status = LedgerStatus::kSkipped;
      e.detail = std::string("error: ") + ex.what();
    }
    ledger_.entries.push_back(std::move(e));
  }

  void expect_within(LedgerEntry& e, double metric) {
    e.metric = metric;
    if (!(metric <= c_.tol)) e.status = LedgerStatus::kFail;
  }

  void tables(LedgerEntry& e) {
    double dev = 0.0;
    auto compare = [&](const std::string& label, const Eigen::MatrixXcd& printed) {
      const CharacterTable ct = character_table(group_from_label(label));
      if (ct.class_values().rows() != printed.rows()) {
        dev = INFINITY;
        return;
      }
      dev = std::max(dev, (ct.class_values() - printed).cwiseAbs().maxCoeff());
    };
    const Complex w3 = std::polar(1.0, 2.0 * M_PI / 3.0);
    Eigen::MatrixXcd z3(3, 3);
    z3 << 1, 1, 1, 1, w3, w3 * w3, 1, w3 * w3, w3;
    compare("Z3", z3);
    const Complex I(0.0, 1.0);
    Eigen::MatrixXcd z4(4, 4);
    z4 << 1, 1, 1, 1, 1, I, -1.0, -I, 1, -1.0, 1, -1.0, 1, -I, -1.0, I;
    compare("Z4", z4);
    compare("S3", *reference_class_values("S3"));
    compare("Q8", *reference_class_values("Q8"));
    for (int n = 1; n <= 64; ++n) {
      Eigen::MatrixXcd zn(n, n);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) zn(i, k) = std::polar(1.0, 2.0 * M_PI * ((i * k) % n) / n);
      compare("Z" + std::to_string(n), zn);
    }
    expect_within(e, dev);
    e.detail = "max entrywise deviation " + sci(dev) + " over Z3, Z4, S3, Q8 and Z1..Z64";
  }

  void orthogonality(LedgerEntry& e) {
    double dev = 0.0;
    auto one = [&](const Group& g) {
      const CharacterTable ct = character_table(g);
      const auto rep = verify_orthogonality(ct, c_.tol);
      dev = std::max({dev, rep.row_deviation, rep.column_deviation});
      if (g.is_abelian()) {
        const int n = g.order();
        const Eigen::MatrixXcd prod = ct.phi() * ct.phi().adjoint() / static_cast<double>(n);
        dev = std::max(dev, (prod - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
      }
    };
    for (const char* name : {"S3", "Q8", "V4", "D4"}) one(make_named(name));
    for (int n = 1; n <= 64; ++n) one(make_cyclic(n));
    expect_within(e, dev);
    e.detail = "max deviation " + sci(dev) + " over S3, Q8, V4, D4 and Z1..Z64";
  }

  // For a class function the sum collapses to
  // D(sigma) = n sum_i |a_i|^2 chi_i(sigma) / chi_i(e).
  void derivative(LedgerEntry& e) {
    Rng rng(c_.seed);
    double dev = 0.0;
    for (const char* label : {"Z5", "Z8", "V4", "S3", "Q8", "D4"}) {
      const TablePtr ct = table_for(label);
      const int n = ct->order();
      for (int trial = 0; trial < 20; ++trial) {
        const ClassFunction f = ClassFunction::FromCoefficients(ct, random_coeffs(ct->size(), rng));
        for (int s = 0; s < n; ++s) {
          Complex closed = 0.0;
          for (int i = 0; i < ct->size(); ++i)
            closed += std::norm(f.coefficients()[i]) * ct->value(i, s) /
                      static_cast<double>(ct->degrees()[i]);
          closed *= static_cast<double>(n);
          dev = std::max(dev, std::abs(derivative_sum(f, s) - closed) / n);
        }
      }
    }
    expect_within(e, dev);
    e.detail = "max |D - closed form| / n = " + sci(dev) + " over 120 random class functions";
  }

  void bent_iff(LedgerEntry& e) {
    Rng rng(c_.seed + 1);
    int cases = 0, disagreements = 0;
    auto compare = [&](const ClassFunction& f) {
      ++cases;
      if (is_bent(f, c_.tol).bent() != is_bent_spectral(f, c_.tol)) ++disagreements;
    };
    for (int n = 2; n <= 16; ++n) {
      const TablePtr ct = table_for(make_cyclic(n));
      compare(ClassFunction::FromCoefficients(ct, scaled(zadoff_chu(n, 1))));
      for (int t = 0; t < 20; ++t) {
        compare(ClassFunction::FromCoefficients(ct, random_coeffs(n, rng)));
        compare(ClassFunction::FromCoefficients(ct, random_flat_coeffs(n, rng)));
      }
    }
    const TablePtr v4 = table_for("V4");
    compare(ClassFunction::FromCoefficients(v4, {0.5, 0.5, 0.5, -0.5}));
    e.metric = disagreements;
    if (disagreements != 0) e.status = LedgerStatus::kFail;
    e.detail = std::to_string(disagreements) + " disagreements between the derivative-sum and "
               "spectral tests in " + std::to_string(cases) + " cases";
  }

  void abelian_necessary(LedgerEntry& e) {
    double dev = 0.0;
    int not_bent = 0;
    for (int n = 2; n <= 64; ++n) {
      const TablePtr ct = table_for(make_cyclic(n));
      const ClassFunction f = ClassFunction::FromCoefficients(ct, scaled(zadoff_chu(n, 1)));
      if (!is_bent(f, c_.tol).bent()) ++not_bent;
      for (const Complex& a : f.coefficients()) dev = std::max(dev, std::abs(std::norm(a) - 1.0 / n));
      for (double w : solve_abelian_magnitudes(*ct)) dev = std::max(dev, std::abs(w - 1.0 / n));
    }
    for (double w : solve_abelian_magnitudes(*table_for("V4"))) dev = std::max(dev, std::abs(w - 0.25));
    expect_within(e, dev);
    if (not_bent) e.status = LedgerStatus::kFail;
    e.detail = "max ||a_i|^2 - 1/n| = " + sci(dev) + " on Z2..Z64 witnesses and linear solves; " +
               std::to_string(not_bent) + " witnesses not certified";
  }

  void z2_counterexample(LedgerEntry& e) {
    const double h = 1.0 / std::sqrt(2.0);
    const ClassFunction f = ClassFunction::FromCoefficients(table_for("Z2"), {h, h});
    const BentReport rep = is_bent(f, c_.tol);
    e.metric = rep.unimodular_deviation;
    if (rep.verdict != Verdict::kNotUnimodular) e.status = LedgerStatus::kFail;
    e.detail = std::string("verdict ") + to_string(rep.verdict) + ", f(0) = " +
               fmt("%.6f", f(0).real()) + ", f(1) = " + fmt("%.6f", f(1).real());
  }

  // Compares cyclic_criterion with the oracle on random, flat-random and
  // constructed coefficient vectors.
  std::pair<int, int> cyclic_agreement(int n, int trials, Rng& rng) {
    const TablePtr ct = table_for(make_cyclic(n));
    int cases = 0, disagreements = 0;
    auto compare = [&](const ComplexVector& a) {
      ++cases;
      const ClassFunction f = ClassFunction::FromCoefficients(ct, a);
      if (cyclic_criterion(a, c_.tol).satisfied != is_bent(f, c_.tol).bent()) ++disagreements;
    };
    for (int t = 0; t < trials; ++t) {
      compare(random_coeffs(n, rng));
      compare(random_flat_coeffs(n, rng));
    }
    for (int u = 1; u < 2 * n; ++u)
      if (std::gcd(u, n) == 1) compare(scaled(zadoff_chu(n, u)));
    if (n % 2 == 1) compare(scaled(quadratic_chirp(n)));
    return {cases, disagreements};
  }

  void cyclic_small(LedgerEntry& e) {
    Rng rng(c_.seed + 2);
    int cases = 0, bad = 0;
    for (int n : {3, 4}) {
      const auto [c, d] = cyclic_agreement(n, 250, rng);
      cases += c;
      bad += d;
    }
    e.metric = bad;
    if (bad) e.status = LedgerStatus::kFail;
    e.detail = std::to_string(bad) + " disagreements with the oracle in " + std::to_string(cases) +
               " cases on Z3 and Z4";
  }

  void cyclic_theorem(LedgerEntry& e) {
    Rng rng(c_.seed + 3);
    int cases = 0, bad = 0;
    for (int n = 2; n <= 12; ++n) {
      const auto [c, d] = cyclic_agreement(n, 100, rng);
      cases += c;
      bad += d;
    }
    e.metric = bad;
    if (bad) e.status = LedgerStatus::kFail;
    e.detail = std::to_string(bad) + " disagreements with the oracle in " + std::to_string(cases) +
               " cases on Z2..Z12";
  }

  void constructions(LedgerEntry& e) {
    double worst = 0.0;
    int count = 0, failures = 0;
    auto one = [&](int n, const ComplexVector& g, const TablePtr& ct) {
      ++count;
      const ClassFunction f = ClassFunction::FromCoefficients(ct, scaled(g));
      const BentReport rep = is_bent(f, c_.tol);
      if (!rep.bent()) ++failures;
      double flat = 0.0;
      for (double s : spectrum(f)) flat = std::max(flat, std::abs(s - n));
      worst = std::max({worst, rep.max_residual / n, rep.unimodular_deviation, flat / n});
    };
    for (int n = 2; n <= 64; ++n) {
      const TablePtr ct = table_for(make_cyclic(n));
      for (int u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) one(n, zadoff_chu(n, u), ct);
      if (n % 2 == 1) one(n, quadratic_chirp(n), ct);
    }
    expect_within(e, worst);
    if (failures) e.status = LedgerStatus::kFail;
    e.detail = std::to_string(count - failures) + "/" + std::to_string(count) +
               " sequences certified; worst normalised residual " + sci(worst);
  }

  // Exhaustive over a_i = i^{k_i} / 2. The printed conditions repeat one
  // pairing and omit conj(a1)a4 + conj(a4)a1 + conj(a2)a3 + conj(a3)a2, so
  // they are necessary but not sufficient.
  void klein(LedgerEntry& e) {
    const TablePtr ct = table_for("V4");
    const Complex I(0.0, 1.0);
    int bent = 0, necessity = 0, sufficiency = 0;
    for (int code = 0; code < 256; ++code) {
      ComplexVector a(4);
      for (int i = 0, c = code; i < 4; ++i, c /= 4) a[i] = 0.5 * std::pow(I, c % 4);
      const bool oracle = is_bent(ClassFunction::FromCoefficients(ct, a), c_.tol).bent();
      const bool printed = klein_criterion(a, c_.tol).satisfied;
      bent += oracle;
      necessity += oracle && !printed;
      sufficiency += printed && !oracle;
    }
    e.metric = sufficiency;
    if (necessity) {
      e.status = LedgerStatus::kFail;
      e.gating = true;
    }
    e.detail = std::to_string(bent) + "/256 quarter-phase vectors bent; printed conditions miss " +
               std::to_string(necessity) + " of them and accept " + std::to_string(sufficiency) +
               " non-bent ones, e.g. (1, i, i, 1)/2 with |f(e)| = sqrt(2)";
  }

  void s3_cert(LedgerEntry& e) {
    const S3Certificate cert = s3_certificate(std::min(c_.tol, 1e-12));
    const double metric = std::max({cert.system_residual, cert.magnitude_residual,
                                    std::abs(cert.cross_term + 2.0 / 3.0), cert.cross_coupling,
                                    std::abs(cert.ratio_check)});
    expect_within(e, metric);
    if (!cert.contradiction) e.status = LedgerStatus::kFail;
    e.detail = "|a|^2 = (" + fmt("%.6f", cert.magnitudes[0]) + ", " +
               fmt("%.6f", cert.magnitudes[1]) + ", " + fmt("%.6f", cert.magnitudes[2]) +
               "), cross term " + fmt("%.6f", cert.cross_term) + ", Cauchy-Schwarz " +
               fmt("%.6f", cert.cs_lhs) + " > " + fmt("%.6f", cert.cs_rhs);
  }

  SearchResult search(const std::string& group) {
    SearchConfig sc;
    sc.group = group;
    sc.budget = c_.budget;
    sc.seed = c_.seed;
    sc.tol = c_.tol;
    return run_search(sc);
  }

  void s3_search(LedgerEntry& e) {
    const SearchResult r = search("S3");
    e.metric = r.best_objective;
    if (r.certified_bent) {
      // A certified witness would contradict the certificate above.
      e.status = LedgerStatus::kFail;
      e.gating = true;
    }
    e.detail = std::string(r.certified_bent ? "certified a witness" : "no witness") + " in " +
               std::to_string(r.evaluations) + " evaluations; best objective " +
               fmt("%.6f", r.best_objective);
  }

  void q8_system(LedgerEntry& e) {
    const MagnitudeSolution sol = solve_q8_system();
    const double expected[5] = {2.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9, 1.0 / 9};
    double dev = sol.residual;
    for (int i = 0; i < 5; ++i) dev = std::max(dev, std::abs(sol.magnitudes[i] - expected[i]));
    expect_within(e, dev);
    e.detail = "solution (" + fmt("%.6f", sol.magnitudes[0]) + " x4, " +
               fmt("%.6f", sol.magnitudes[4]) + "), residual " + sci(sol.residual);
  }

  // The table forces |a_1..4|^2 = 1/8 and |a_5|^2 = 1/2 instead of the printed
  // values, and even those give |f(1)|^2 + |f(-1)|^2 >= 4, so no bent class
  // function exists. The search is reported alongside.
  void q8_existence(LedgerEntry& e) {
    const MagnitudeSolution derived = derived_magnitude_system(*table_for("Q8"));
    const SearchResult r = search("Q8");
    e.metric = r.best_objective;
    e.detail = "magnitudes forced by the table (" + fmt("%.6f", derived.magnitudes[0]) + " x4, " +
               fmt("%.6f", derived.magnitudes[4]) + "), residual " + sci(derived.residual) +
               "; search " + (r.certified_bent ? "certified a witness" : "found no witness") +
               ", best objective " + fmt("%.6f", r.best_objective);
  }

  void z2_existence(LedgerEntry& e) {
    const double h = 1.0 / std::sqrt(2.0);
    const ClassFunction f =
        ClassFunction::FromCoefficients(table_for("Z2"), {Complex(h, 0.0), Complex(0.0, h)});
    const BentReport rep = is_bent(f, c_.tol);
    e.metric = rep.max_residual;
    e.detail = std::string("a = (1, i)/sqrt(2) gives verdict ") + to_string(rep.verdict);
  }

  void invariance(LedgerEntry& e) {
    Rng rng(c_.seed + 4);
    const TablePtr v4 = table_for("V4");
    int broken = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int pick = rng.below(16);
      TablePtr ct;
      ComplexVector a;
      if (pick == 0) {
        ct = v4;
        a = {0.5, 0.5, 0.5, -0.5};
      } else {
        const int n = pick + 1;
        ct = table_for(make_cyclic(n));
        int u = 1 + rng.below(n);
        while (std::gcd(u, n) != 1) u = u % n + 1;
        a = scaled(zadoff_chu(n, u));
      }
      ClassFunction f = ClassFunction::FromCoefficients(ct, a);
      const int steps = 1 + rng.below(5);
      for (int s = 0; s < steps; ++s) {
        switch (rng.below(3)) {
          case 0: f = transform(f, Transform::GlobalPhase(std::polar(1.0, 2.0 * M_PI * rng.uniform()))); break;
          case 1: f = transform(f, Transform::Translate(rng.below(ct->order()))); break;
          default: f = transform(f, Transform::CharacterTwist(rng.below(ct->size()))); break;
        }
      }
      const BentReport rep = is_bent(f, c_.tol);
      if (!rep.bent()) ++broken;
      worst = std::max(worst, rep.max_residual / ct->order());
    }
    e.metric = broken;
    if (broken) e.status = LedgerStatus::kFail;
    e.detail = std::to_string(100 - broken) + "/100 transformed witnesses stay bent; worst residual " +
               sci(worst);
  }

  VerifyConfig c_;
  PaperLedger ledger_;
};

}  // namespace

const std::vector<std::string>& ledger_claim_ids() {
  static const std::vector<std::string> ids = {
      "character-tables", "orthogonality",  "derivative-sum",    "bent-iff",
      "abelian-necessary", "z2-counterexample", "cyclic-z3-z4",   "cyclic-theorem",
      "constructions",    "klein-remark",   "s3-certificate",    "s3-search",
      "q8-printed-system", "q8-existence",  "z2-existence",      "invariance"};
  return ids;
}

PaperLedger verify_paper(const VerifyConfig& config) { return Verifier(config).run(); }

Json ledger_to_json(const PaperLedger& ledger) {
  Json entries = Json::array();
  for (const auto& e : ledger.entries) {
    entries.push_back({{"id", e.id},
                       {"location", e.location},
                       {"status", to_string(e.status)},
                       {"gating", e.gating},
                       {"metric", e.metric},
                       {"detail", e.detail}});
  }
  return {{"config",
           {{"tol", ledger.config.tol}, {"budget", ledger.config.budget}, {"seed", ledger.config.seed}}},
          {"entries", entries},
          {"summary",
           {{"pass", ledger.count(LedgerStatus::kPass)},
            {"fail", ledger.count(LedgerStatus::kFail)},
            {"evidence", ledger.count(LedgerStatus::kEvidence)},
            {"skipped", ledger.count(LedgerStatus::kSkipped)},
            {"ok", ledger.ok()}}}};
}

}  // namespace bent
