#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ritt/diffpoly.hpp"
#include "ritt/errors.hpp"
#include "ritt/slices.hpp"

namespace ritt {

/// Generator set B with its symmetric integer locality bound matrix N.
struct LocalitySpec {
    std::vector<std::string> letters;
    std::vector<std::vector<int>> N;
};

/// Rejects specs this module cannot handle: N must be symmetric, have only
/// non-positive entries (commutativity) and even diagonal (vertex algebra
/// rather than superalgebra).
void check_gates(const LocalitySpec& spec);

Ring spec_ring(const LocalitySpec& spec);

/// Parses {"letters": [...], "N": [[...], ...]} .
LocalitySpec locality_spec_from_json(const std::string& text);

/// Number of basis words per grade, for every grade with weight <=
/// weight_bound and total degree <= degree_bound. A word contributes at the
/// grade formed by its letter counts and the sum of its derived jet indices.
std::map<Grade, std::uint64_t> enumerate_basis(const LocalitySpec& spec,
                                               std::uint64_t weight_bound,
                                               std::uint32_t degree_bound);

/// {a_s b_0 : unordered letter pairs (a, b), 0 <= s <= -N(a,b) - 1}.
std::vector<DiffPoly> jet_ideal_generators(const LocalitySpec& spec);

/// Per-grade equality of the basis-word count and the jet quotient
/// dimension, over the same grade box as enumerate_basis.
bool check_jetfree(const LocalitySpec& spec, std::uint64_t weight_bound,
                   std::uint32_t degree_bound, const SliceLimits& limits = {});

struct CofreeResult {
    bool equal = false;
    std::optional<Grade> first_discrepancy; // least in (weight, multidegree) order
};

/// Compares the graded dimensions of k{B}/I (locality ideal) and of
/// k{B}/(a_0 b_0 : N(a,b) <= -1), the jet lift of the Zhu Poisson algebra.
CofreeResult check_cofree_iff(const LocalitySpec& spec, std::uint64_t weight_bound,
                              std::uint32_t degree_bound, const SliceLimits& limits = {});

struct ZhuResult {
    // multidegree -> dimension of k[B]/(ab : N(a,b) <= -1)
    std::map<std::vector<std::uint32_t>, std::uint64_t> dims;
    bool agree = false; // against the weight-0 basis-word count
};

ZhuResult zhu_poisson_dims(const LocalitySpec& spec, std::uint32_t degree_bound);

} // namespace ritt
