#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sylow/oracle.hpp"

namespace sylow {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Shared oracles across checks, so sweeps computed once are reused.
class Harness {
  public:
    RestrictionOracle& oracle(int p);
    static constexpr unsigned kDefaultSeed = 271828;

  private:
    std::map<int, std::unique_ptr<RestrictionOracle>> oracles_;
};

// The numbered acceptance checks; index in [1, 10].
CheckResult run_criterion(int index, Harness& harness,
                          unsigned seed = Harness::kDefaultSeed);

enum class VerifyTier { smoke, standard, full };

std::vector<int> tier_criteria(VerifyTier tier);

std::vector<CheckResult> run_tier(VerifyTier tier, Harness& harness,
                                  unsigned seed = Harness::kDefaultSeed);

}  // namespace sylow
