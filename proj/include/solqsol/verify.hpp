#pragma once

#include <string>
#include <vector>

#include "solqsol/solitary.hpp"

namespace solqsol {

struct ClaimInfo {
  std::string id;
  VerifyStatus expected;  // probe claims report observations and never fail
  std::string title;
};

const std::vector<ClaimInfo>& claim_catalog();

// Runs one claim; throws std::invalid_argument for unknown ids.
VerificationResult run_claim(const std::string& id);

std::vector<VerificationResult> run_all_claims();

// A run is ok when every claim matched its expected status (probes always do).
bool outcome_ok(const VerificationResult& r);

}  // namespace solqsol
