#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ritt/slices.hpp"
#include "ritt/witness.hpp"

namespace ritt {

struct SearchOptions {
    std::uint32_t cap = 0; // 0: predicted index + 2
    bool fast = false;     // probe only {predicted-1, predicted}
    SliceLimits limits;
    // Slices up to certs.exact_threshold monomials are decided by the
    // generic rank kernel. Larger ones are decided by exact, runtime-checked
    // certificates (verified functionals for non-membership, windowed
    // witness combinations for membership) with the rank kernel as the
    // fallback; certificates never assume the formulas under test.
    CertificatePolicy certs;
};

struct WitnessGrade {
    std::uint32_t q = 0;
    Grade grade;
    std::uint64_t basis_size = 0;
    std::int64_t ideal_rank = -1; // -1 when this decision path did not compute it
    bool member = false;
    std::string method; // "rank", "rank-early", "functional", "margin-functional", "witness"
};

struct RittAnswer {
    std::uint32_t found = 0;
    std::uint32_t predicted = 0;
    bool agree = false;
    std::vector<WitnessGrade> witnesses;
};

/// Least q with T_i^q in [T_0^p]; predicted (i+1)p - i.
RittAnswer q_single(std::uint32_t i, std::uint32_t p, const SearchOptions& opts = {});

/// Least q with (T_i U_j)^q in [T_0 U_0]; predicted i + j + 1.
RittAnswer q_pair(std::uint32_t i, std::uint32_t j, const SearchOptions& opts = {});

/// T_{i-1}^{i(p-1)} not in [T_0^p] and T_{i-1}^{i(p-1)+1} in [T_0^p].
bool verify_proposition_34(std::uint32_t i, std::uint32_t p, const SearchOptions& opts = {});

} // namespace ritt
