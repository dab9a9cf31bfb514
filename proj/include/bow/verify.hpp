#pragma once

#include <string>
#include <vector>

#include "bow/butterfly.hpp"

namespace bow {

enum class CheckStatus { Pass, Fail, Skipped };
const char* checkStatusName(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

// Checks, in order: "moment-map", "S1/S2", "stability", "junctions",
// "nilpotency", "grading".
VerificationReport verifyFixedPoint(const FixedPointData& f);

// Smallest coordinate subspace containing the forced vectors and closed under
// the stability hypotheses; the point is stable iff it is everything.
std::vector<bool> stabilityClosure(const FixedPointData& f);
// Same question answered by testing every coordinate subspace; returns -1 when
// the total dimension exceeds maxDim, else 1 for stable and 0 for unstable.
int stabilityBruteForce(const FixedPointData& f, int maxDim);

}  // namespace bow
