#include "ritt/margin_count.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ritt {

namespace {

// injective on sorted vectors of entries in [1,15] (length <= 16):
// the leading nibble is nonzero, so the length is recoverable
std::uint64_t pack(const std::vector<std::uint32_t>& v) {
    std::uint64_t key = 0;
    for (std::uint32_t x : v) key = (key << 4) | x;
    return key;
}

} // namespace

Int MarginCounter::count(std::vector<std::uint32_t> cols, std::vector<std::uint32_t> rows) {
    if (cols.size() > 16 || rows.size() > 16)
        throw std::invalid_argument("margin count limited to 16x16");
    for (std::uint32_t c : cols)
        if (c > 15) throw std::invalid_argument("margin count limited to margins <= 15");
    for (std::uint32_t r : rows)
        if (r > 15) throw std::invalid_argument("margin count limited to margins <= 15");
    std::uint64_t sc = std::accumulate(cols.begin(), cols.end(), std::uint64_t{0});
    std::uint64_t sr = std::accumulate(rows.begin(), rows.end(), std::uint64_t{0});
    if (sc != sr) return 0;
    for (std::uint32_t c : cols)
        if (c > rows.size()) return 0;
    for (std::uint32_t r : rows)
        if (r > cols.size()) return 0;
    std::sort(cols.begin(), cols.end(), std::greater<>());
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return rec(std::move(cols), std::move(rows));
}

Int MarginCounter::rec(std::vector<std::uint32_t> cols, std::vector<std::uint32_t> rows) {
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (cols.empty()) return rows.empty() ? 1 : 0;
    for (std::uint32_t r : rows)
        if (r > cols.size()) return 0;
    auto key = std::make_pair(pack(cols), pack(rows));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::uint32_t c = cols.front();
    std::vector<std::uint32_t> rest(cols.begin() + 1, cols.end());

    // group rows by remaining capacity
    std::vector<std::pair<std::uint32_t, std::uint32_t>> groups; // (capacity, size)
    for (std::uint32_t r : rows) {
        if (!groups.empty() && groups.back().first == r) ++groups.back().second;
        else groups.emplace_back(r, 1);
    }

    Int total = 0;
    std::vector<std::uint32_t> take(groups.size(), 0);
    // distribute the c ones of this column over the capacity groups
    auto dfs = [&](auto&& self, std::size_t gi, std::uint32_t left, const Int& ways) -> void {
        if (left == 0) {
            std::vector<std::uint32_t> nrows;
            nrows.reserve(rows.size());
            for (std::size_t k = 0; k < groups.size(); ++k) {
                auto [cap, sz] = groups[k];
                for (std::uint32_t t = 0; t < take[k]; ++t) nrows.push_back(cap - 1);
                for (std::uint32_t t = take[k]; t < sz; ++t) nrows.push_back(cap);
            }
            std::sort(nrows.begin(), nrows.end(), std::greater<>());
            total += ways * rec(rest, std::move(nrows));
            return;
        }
        if (gi >= groups.size()) return;
        std::uint32_t maxk = std::min(left, groups[gi].second);
        for (std::uint32_t k = 0; k <= maxk; ++k) {
            take[gi] = k;
            self(self, gi + 1, left - k, ways * binomial(groups[gi].second, k));
        }
        take[gi] = 0;
    };
    dfs(dfs, 0, c, Int(1));

    memo_.emplace(key, total);
    return total;
}

Int count_margin_matrices(std::uint32_t n, std::uint32_t j) {
    if (j > n) throw std::invalid_argument("margin j must satisfy 0 <= j <= n");
    MarginCounter mc;
    std::vector<std::uint32_t> cols(n, j), rows(n, j);
    return mc.count(std::move(cols), std::move(rows));
}

} // namespace ritt
