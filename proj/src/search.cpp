#include "bent/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bent/class_function.hpp"
#include "bent/error.hpp"

namespace bent {

const char* to_string(SearchStrategy s) {
  return s == SearchStrategy::kRandom ? "RANDOM" : "RANDOM_PLUS_LOCAL";
}

SearchStrategy parse_strategy(const std::string& s) {
  if (s == "RANDOM" || s == "random") return SearchStrategy::kRandom;
  if (s == "RANDOM_PLUS_LOCAL" || s == "random-plus-local" || s == "local")
    return SearchStrategy::kRandomPlusLocal;
  throw InvalidInput("unknown search strategy '" + s + "'");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio

struct Scores {
  double objective;  // max-type residual reported to callers
  double smooth;     // sum of squares used for line searches
};

class Evaluator {
 public:
  explicit Evaluator(const CharacterTable& ct) : ct_(ct), values_(ct.order()) {}

  Scores operator()(std::span<const Complex> a) {
    const Group& g = ct_.group();
    const int n = g.order();
    const int r = ct_.size();
    const auto& phi = ct_.phi();
    for (int x = 0; x < n; ++x) {
      Complex s = 0.0;
      for (int i = 0; i < r; ++i) s += a[i] * phi(x, i);
      values_[x] = s;
    }
    double unimod = 0.0, smooth = 0.0;
    for (const Complex& v : values_) {
      const double m2 = std::norm(v);
      unimod = std::max(unimod, std::abs(std::sqrt(m2) - 1.0));
      smooth += (m2 - 1.0) * (m2 - 1.0);
    }
    double resid = 0.0;
    for (int sigma = 0; sigma < n; ++sigma) {
      if (sigma == g.identity()) continue;
      Complex d = 0.0;
      for (int x = 0; x < n; ++x) d += std::conj(values_[x]) * values_[g.mul(sigma, x)];
      const double m = std::abs(d) / n;
      resid = std::max(resid, m);
      smooth += m * m;
    }
    return {resid + unimod, smooth};
  }

 private:
  const CharacterTable& ct_;
  ComplexVector values_;
};

// Candidate in search coordinates: a_i = m_i e^{i theta_i} / ||m||.
struct Params {
  std::vector<double> mag;
  std::vector<double> phase;

  ComplexVector coeffs() const {
    double norm = 0.0;
    for (double m : mag) norm += m * m;
    norm = std::sqrt(norm);
    ComplexVector a(mag.size());
    if (norm == 0.0) return a;
    for (size_t i = 0; i < mag.size(); ++i) a[i] = std::polar(mag[i] / norm, phase[i]);
    return a;
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, 1), built from raw engine bits so that the stream is
  // identical on every standard library.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

Params random_params(int r, Rng& rng) {
  Params p;
  p.mag.resize(r);
  p.phase.resize(r);
  for (int i = 0; i < r; ++i) p.mag[i] = std::sqrt(-std::log1p(-rng.uniform()));
  for (int i = 0; i < r; ++i) p.phase[i] = kTwoPi * rng.uniform();
  return p;
}

class Search {
 public:
  Search(const SearchConfig& config, const CharacterTable& ct)
      : config_(config), ct_(ct), eval_(ct) {}

  SearchResult run() {
    result_.config = config_;
    result_.best_objective = std::numeric_limits<double>::infinity();
    result_.exploratory = ct_.group().exploratory();
    Rng rng(config_.seed);
    const int r = ct_.size();
    while (!done()) {
      Params p = random_params(r, rng);
      double smooth = score(p).smooth;
      if (config_.strategy == SearchStrategy::kRandomPlusLocal) refine(p, smooth);
    }
    finish();
    return result_;
  }

 private:
  bool done() const { return result_.certified_bent || result_.evaluations >= config_.budget; }

  Scores score(const Params& p) {
    const ComplexVector a = p.coeffs();
    const Scores s = eval_(a);
    ++result_.evaluations;
    objectives_.push_back(s.objective);
    if (s.objective < result_.best_objective) {
      result_.best_objective = s.objective;
      result_.best_coeffs = a;
    }
    if (s.objective <= config_.tol && !result_.certified_bent) certify(a);
    return s;
  }

  void certify(const ComplexVector& a) {
    auto shared = std::make_shared<const CharacterTable>(ct_);
    const ClassFunction f = ClassFunction::FromCoefficients(shared, a);
    BentReport rep = is_bent(f, config_.tol);
    if (rep.bent()) {
      result_.certified_bent = true;
      result_.best_coeffs = a;
      result_.report = std::move(rep);
    }
  }

  // Brent minimisation (golden section with parabolic steps) of g on
  // [lo, hi], starting from the incumbent x0 with value f0. Returns the best
  // point seen; never worse than x0.
  template <class Fn>
  std::pair<double, double> brent(Fn&& g, double lo, double hi, double x0, double f0) {
    constexpr double kGolden = 1.0 - kInvPhi;
    double a = lo, b = hi;
    double x = x0, w = x0, v = x0;
    double fx = f0, fw = f0, fv = f0;
    double d = 0.0, e = 0.0;
    for (int it = 0; it < kLineIterations && !done(); ++it) {
      const double m = 0.5 * (a + b);
      const double tol1 = 1e-10 * std::abs(x) + 1e-14;
      const double tol2 = 2.0 * tol1;
      if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
      bool golden = true;
      if (std::abs(e) > tol1) {
        double r = (x - w) * (fx - fv);
        double q = (x - v) * (fx - fw);
        double p = (x - v) * q - (x - w) * r;
        q = 2.0 * (q - r);
        if (q > 0.0) p = -p;
        q = std::abs(q);
        const double etemp = e;
        e = d;
        if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) && p < q * (b - x)) {
          d = p / q;
          const double u = x + d;
          if (u - a < tol2 || b - u < tol2) d = x < m ? tol1 : -tol1;
          golden = false;
        }
      }
      if (golden) {
        e = (x >= m ? a : b) - x;
        d = kGolden * e;
      }
      const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0 ? tol1 : -tol1);
      const double fu = g(u);
      if (fu <= fx) {
        (u >= x ? a : b) = x;
        v = w;
        fv = fw;
        w = x;
        fw = fx;
        x = u;
        fx = fu;
      } else {
        (u < x ? a : b) = u;
        if (fu <= fw || w == x) {
          v = w;
          fv = fw;
          w = u;
          fw = fu;
        } else if (fu <= fv || v == x || v == w) {
          v = u;
          fv = fu;
        }
      }
    }
    return {x, fx};
  }

  double coordinate_search(Params& p, double* coord, double lo, double hi, double current) {
    auto g = [&](double t) {
      *coord = t;
      return score(p).smooth;
    };
    const auto [x, fx] = brent(g, lo, hi, *coord, current);
    *coord = x;
    return fx;
  }

  void refine(Params& p, double smooth) {
    const int r = ct_.size();
    double phase_width = std::numbers::pi;
    double mag_width = 0.5;
    for (int sweep = 0; sweep < kMaxSweeps && !done(); ++sweep) {
      const double before = smooth;
      const Params start = p;
      double phase_step = 0.0, mag_step = 0.0;
      for (int i = 0; i < r && !done(); ++i) {
        const double old = p.phase[i];
        smooth = coordinate_search(p, &p.phase[i], old - phase_width, old + phase_width, smooth);
        phase_step = std::max(phase_step, std::abs(p.phase[i] - old));
      }
      for (int i = 0; i < r && !done(); ++i) {
        const double old = p.mag[i];
        smooth = coordinate_search(p, &p.mag[i], std::max(0.0, old - mag_width), old + mag_width,
                                   smooth);
        mag_step = std::max(mag_step, std::abs(p.mag[i] - old));
      }

      // Pattern step along the displacement of the whole sweep.
      if (!done()) {
        const Params end = p;
        auto move_to = [&](double t) {
          for (int i = 0; i < r; ++i) {
            p.phase[i] = end.phase[i] + t * (end.phase[i] - start.phase[i]);
            p.mag[i] = std::max(0.0, end.mag[i] + t * (end.mag[i] - start.mag[i]));
          }
        };
        auto along = [&](double t) {
          move_to(t);
          return score(p).smooth;
        };
        const auto [t, ft] = brent(along, -0.5, kPatternReach, 0.0, smooth);
        move_to(t);
        smooth = ft;
      }

      double norm = 0.0;
      for (double m : p.mag) norm += m * m;
      norm = std::sqrt(norm);
      if (norm > 0.0)
        for (double& m : p.mag) m /= norm;
      for (double& t : p.phase) t = std::remainder(t, kTwoPi);

      phase_width = std::clamp(4.0 * phase_step, 1e-12, std::numbers::pi);
      mag_width = std::clamp(4.0 * mag_step / std::max(norm, 1e-300), 1e-12, 0.5);
      if (smooth < 1e-28) break;
      if (before - smooth <= 1e-12 * before && phase_width < 1e-9 && mag_width < 1e-9) break;
    }
  }

  void finish() {
    std::vector<double> sorted = objectives_;
    std::sort(sorted.begin(), sorted.end());
    result_.histogram.clear();
    if (sorted.empty()) return;
    for (int q = 0; q <= 10; ++q) {
      const size_t idx = static_cast<size_t>(
          std::llround(q / 10.0 * static_cast<double>(sorted.size() - 1)));
      result_.histogram.push_back(sorted[idx]);
    }
  }

  static constexpr int kLineIterations = 40;
  static constexpr double kPatternReach = 8.0;
  static constexpr int kMaxSweeps = 200;

  const SearchConfig& config_;
  const CharacterTable& ct_;
  Evaluator eval_;
  SearchResult result_;
  std::vector<double> objectives_;
};

}  // namespace

double objective(const CharacterTable& ct, std::span<const Complex> a) {
  if (a.size() != static_cast<size_t>(ct.size())) {
    throw InvalidInput("objective expects " + std::to_string(ct.size()) + " coefficients, got " +
                       std::to_string(a.size()));
  }
  Evaluator eval(ct);
  return eval(a).objective;
}

SearchResult run_search(const SearchConfig& config) {
  if (config.budget < 1) throw InvalidInput("search budget must be at least 1");
  const Group g = group_from_label(config.group);
  if (!g.is_abelian() && g.order() > 16) {
    throw CapabilityError("nonabelian search is limited to groups of order <= 16");
  }
  const CharacterTable ct = character_table(g);
  return Search(config, ct).run();
}

}  // namespace bent
