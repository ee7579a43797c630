#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chevalley/rng.hpp"

namespace chevalley {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    uint64_t seed = kDefaultSeed;
    bool quick = false;  // smoke mode with reduced sample counts
};

/// The full verification suite; each entry is independent and prints
/// nothing (the caller renders results).
std::vector<CriterionResult> run_verification(const VerifyOptions& opts);

/// One criterion by id (1..10).
CriterionResult run_criterion(int id, const VerifyOptions& opts);

std::string verification_json(const std::vector<CriterionResult>& results, uint64_t seed,
                              bool with_timestamp);

}  // namespace chevalley
