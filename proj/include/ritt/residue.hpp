#pragma once

#include <cstdint>

#include "ritt/nilpotency.hpp"
#include "ritt/rational.hpp"

namespace ritt {

struct ResidueOptions {
    std::uint32_t max_n = 7; // expansion ceiling on n = i + j
};

/// Coefficient of prod_l z_l^{-j} prod_k w_k^{j} in
/// prod_{k,l=1..n} (1 - w_k/z_l), n = i + j >= 1.
///
/// Computed by expanding the product cell by cell, discarding partial
/// selections whose exponent budget is already violated; the sign of each
/// surviving selection is accumulated term by term. Deliberately a
/// different algorithm from count_margin_matrices.
Int residue_coefficient(std::uint32_t i, std::uint32_t j, const ResidueOptions& opts = {});

/// Ties the two computations of the pair threshold together:
/// residue_coefficient(i, j) != 0 and q_pair(i, j) == i + j + 1.
bool check_rittab(std::uint32_t i, std::uint32_t j, const SearchOptions& opts = {},
                  const ResidueOptions& ropts = {});

} // namespace ritt
