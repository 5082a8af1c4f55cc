#pragma once

#include <string>
#include <vector>

#include "adq/search.hpp"

namespace adq::verify {

struct CriterionResult {
    std::string id;
    std::string label;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    unsigned workers = 1;
    ProgressFn progress;
};

// quick: catalog self-checks, shortening chain, duality identities,
// concatenation/Griesmer, linearity tests (seconds).
std::vector<CriterionResult> run_quick(const Options& opts = {});

// standard additions: the three completion/coverage searches (minutes).
std::vector<CriterionResult> run_standard_only(const Options& opts = {});

// long additions: the strength-5 completions of the five configuration duals
// in V_12 (hours; opt-in).
std::vector<CriterionResult> run_long_only(const Options& opts = {});

// Cumulative tiers: "quick", "standard", "long".
std::vector<CriterionResult> run_tier(const std::string& tier, const Options& opts = {});

}  // namespace adq::verify
