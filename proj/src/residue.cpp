#include "ritt/residue.hpp"

#include <unordered_map>

#include "ritt/errors.hpp"

namespace ritt {

namespace {

std::uint64_t pack_counts(const std::vector<std::uint32_t>& v) {
    std::uint64_t key = 0;
    for (std::uint32_t x : v) key = (key << 4) | x;
    return key;
}

} // namespace

Int residue_coefficient(std::uint32_t i, std::uint32_t j, const ResidueOptions& opts) {
    const std::uint32_t n = i + j;
    if (n < 1) throw std::invalid_argument("residue_coefficient needs i + j >= 1");
    if (n > opts.max_n)
        throw ResourceExceeded("residue expansion limited to i + j <= " +
                               std::to_string(opts.max_n));

    // Walk the n x n factor grid column by column. Selecting factor (k, l)
    // contributes -w_k / z_l, so a full selection survives the extraction
    // iff every column picks exactly j factors and every row ends at j.
    // Partial states carry the per-row selection counts; signs accumulate
    // per selected factor.
    std::vector<std::unordered_map<std::uint64_t, Int>> memo(n);
    std::vector<std::uint32_t> row_counts(n, 0);

    std::function<Int(std::uint32_t)> column_sum = [&](std::uint32_t col) -> Int {
        if (col == n) {
            for (std::uint32_t r : row_counts)
                if (r != j) return 0; // w_k exponent budget missed
            return 1;
        }
        std::uint64_t key = pack_counts(row_counts);
        if (auto it = memo[col].find(key); it != memo[col].end()) return it->second;

        Int total = 0;
        // choose which rows of this column contribute their -w_k/z_l term;
        // `sign` tracks (-1) per factor selected so far in this column
        std::function<void(std::uint32_t, std::uint32_t, int)> pick =
            [&](std::uint32_t k, std::uint32_t left, int sign) {
                if (left == 0) {
                    Int sub = column_sum(col + 1);
                    if (sub != 0) total += sign < 0 ? -sub : sub;
                    return;
                }
                if (k >= n || n - k < left) return;
                if (row_counts[k] < j) { // row budget not yet violated
                    row_counts[k] += 1;
                    pick(k + 1, left - 1, -sign);
                    row_counts[k] -= 1;
                }
                pick(k + 1, left, sign);
            };
        pick(0, j, 1);

        memo[col].emplace(key, total);
        return total;
    };

    return column_sum(0);
}

bool check_rittab(std::uint32_t i, std::uint32_t j, const SearchOptions& opts,
                  const ResidueOptions& ropts) {
    if (i + j >= 1) {
        if (residue_coefficient(i, j, ropts) == 0) return false;
    }
    RittAnswer a = q_pair(i, j, opts);
    return a.found == i + j + 1;
}

} // namespace ritt
