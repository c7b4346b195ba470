#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bent/serialize.hpp"

namespace bent {

// PASS/FAIL entries are deterministic checks and gate the exit status.
// EVIDENCE entries come from searches or from claims that only hold in one
// direction; SKIPPED marks evidence entries that were not run (budget 0).
enum class LedgerStatus { kPass, kFail, kEvidence, kSkipped };

const char* to_string(LedgerStatus s);

struct LedgerEntry {
  std::string id;
  std::string location;  // where the claim sits, in words
  LedgerStatus status = LedgerStatus::kFail;
  // PASS-class entries set gating = true; their status is PASS or FAIL.
  bool gating = true;
  double metric = 0.0;
  std::string detail;
};

struct VerifyConfig {
  double tol = 1e-8;
  long long budget = 100000;  // per search entry; 0 skips the searches
  std::uint64_t seed = 7;
};

struct PaperLedger {
  VerifyConfig config;
  std::vector<LedgerEntry> entries;
  int count(LedgerStatus s) const;
  // True when no gating entry failed.
  bool ok() const;
};

// Stable claim ids, in ledger order.
const std::vector<std::string>& ledger_claim_ids();

// Reruns every checkable claim. Exceptions raised inside a check turn that
// entry into FAIL (gating) or SKIPPED (evidence) with the message as detail.
PaperLedger verify_paper(const VerifyConfig& config = {});

Json ledger_to_json(const PaperLedger& ledger);

}  // namespace bent
