#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mobius/config.hpp"

namespace mobius::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  nlohmann::json details;
};

struct VerifyOptions {
  int max_n = 6;          // cap on the per-criterion n ranges
  int threads = 1;
  bool extended_n7 = false;  // include n = 7 in the completeness criterion
};

// Criteria 1..11. Claim-vs-oracle disagreements are reported in the details
// and never fail a criterion; only broken witnesses, violated invariants or
// wrong exact values do.
std::vector<CriterionResult> run_criteria(const VerifyOptions& opts);

// Criteria 1..12; the last one reruns the suite to compare byte-identical
// reports across runs and across thread counts.
std::vector<CriterionResult> run_all(const VerifyOptions& opts);

nlohmann::json report_json(const std::vector<CriterionResult>& results);

}  // namespace mobius::verify
