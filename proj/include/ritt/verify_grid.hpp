#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ritt/nilpotency.hpp"

namespace ritt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full verification grid (the same checks the acceptance suite
/// asserts) and returns one result per criterion, in order.
std::vector<CriterionResult> run_verification_grid(const SearchOptions& opts);

} // namespace ritt
