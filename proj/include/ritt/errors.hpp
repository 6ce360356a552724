#pragma once

#include <stdexcept>
#include <string>

namespace ritt {

// A graded slice grew past the configured ceiling.
struct ResourceExceeded : std::runtime_error {
    explicit ResourceExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An ascending nilpotency search ran past its cap without finding a member.
struct SearchCapExceeded : std::runtime_error {
    explicit SearchCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SliceLimits {
    // hard ceiling on the number of monomials a materialized slice may hold
    unsigned long long max_basis = 500000;
};

} // namespace ritt
