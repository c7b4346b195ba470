#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bent/bent_check.hpp"
#include "bent/char_table.hpp"

namespace bent {

enum class SearchStrategy { kRandom, kRandomPlusLocal };

const char* to_string(SearchStrategy s);
SearchStrategy parse_strategy(const std::string& s);

struct SearchConfig {
  std::string group = "S3";
  long long budget = 100000;  // objective evaluations, >= 1
  std::uint64_t seed = 7;
  double tol = 1e-8;
  SearchStrategy strategy = SearchStrategy::kRandomPlusLocal;
};

struct SearchResult {
  SearchConfig config;
  double best_objective = 0.0;
  ComplexVector best_coeffs;
  bool certified_bent = false;
  long long evaluations = 0;
  // Objective quantiles at 0%, 10%, ..., 100% over every evaluation.
  std::vector<double> histogram;
  // Present iff certified_bent.
  std::optional<BentReport> report;
  bool exploratory = false;
};

// max_{sigma != e} |D(sigma)|/n + max_x ||f(x)| - 1| for f = sum a_i chi_i.
// Zero exactly on bent functions.
double objective(const CharacterTable& ct, std::span<const Complex> a);

// Random candidates with |a_i|^2 uniform on the simplex sum |a_i|^2 = 1 and
// uniform phases. RANDOM_PLUS_LOCAL refines each start by coordinate descent
// over phases, then magnitudes (Brent line search per coordinate), followed by
// a line search along the whole sweep's displacement. The line searches
// minimise sum |D/n|^2 + sum (|f|^2 - 1)^2, a smooth stand-in for the
// objective. Deterministic for a given config; never exceeds the budget;
// stops at the first candidate that certifies as BENT at config.tol.
SearchResult run_search(const SearchConfig& config);

}  // namespace bent
