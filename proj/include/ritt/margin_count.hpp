#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ritt/rational.hpp"

namespace ritt {

/// Exact counts of 0-1 matrices with prescribed row and column sums.
///
/// Columns are consumed largest-first; a state is the pair of sorted
/// multisets of remaining column and row capacities, so symmetric states
/// collapse and results are shared across calls. The functional-certificate
/// sweep relies on that sharing.
class MarginCounter {
public:
    /// Matrices with column sums `cols` and row sums `rows` (entries 0/1).
    /// Margins up to 15, at most 16 rows and 16 columns.
    Int count(std::vector<std::uint32_t> cols, std::vector<std::uint32_t> rows);

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
            return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
        }
    };

    Int rec(std::vector<std::uint32_t> cols, std::vector<std::uint32_t> rows);

    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Int, KeyHash> memo_;
};

/// P_{n,j}: n x n 0-1 matrices whose every row and column sums to j.
Int count_margin_matrices(std::uint32_t n, std::uint32_t j);

} // namespace ritt
