#include "ritt/pair_certificates.hpp"

#include <algorithm>
#include <functional>

namespace ritt {

namespace {

// weakly increasing tuples of fixed length with entries in [0, hi]
void multisets_up_to(std::uint32_t len, std::uint32_t hi, std::vector<std::uint32_t>& cur,
                     const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (len == 0) {
        emit(cur);
        return;
    }
    std::uint32_t start = cur.empty() ? 0 : cur.back();
    for (std::uint32_t v = start; v <= hi; ++v) {
        cur.push_back(v);
        multisets_up_to(len - 1, hi, cur, emit);
        cur.pop_back();
    }
}

std::uint64_t sum_of(const std::vector<std::uint32_t>& v) {
    std::uint64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

} // namespace

Int PairMarginFunctional::functional_value(std::uint32_t n,
                                           const std::vector<std::uint32_t>& t_jets,
                                           const std::vector<std::uint32_t>& u_jets) {
    std::vector<std::uint32_t> cols, rows;
    cols.reserve(n);
    rows.reserve(n);
    for (std::uint32_t a : t_jets) {
        if (a > n) return 0; // column margin would be negative
        cols.push_back(n - a);
    }
    std::uint64_t usum = 0;
    for (std::uint32_t b : u_jets) {
        if (b > n) return 0;
        rows.push_back(b);
        usum += b;
    }
    Int v = mc_.count(std::move(cols), std::move(rows));
    if (v == 0) return v;
    for (std::uint32_t a : t_jets) v *= factorial(a);
    for (std::uint32_t b : u_jets) v *= factorial(b);
    if (usum % 2 == 1) v = -v;
    return v;
}

bool PairMarginFunctional::functional_kills_ideal(std::uint32_t n) {
    if (auto it = sweep_ok_.find(n); it != sweep_ok_.end()) return it->second;

    // Every ideal row of the (n, n, n^2) slice is m * derive^s(T_0 U_0)
    // with m of multidegree (n-1, n-1) and s = n^2 - weight(m). A jet of m
    // larger than n survives into every expanded term and zeroes phi there,
    // so only cofactors with all jets <= n need an explicit sweep.
    const std::uint64_t wtotal = std::uint64_t(n) * n;
    bool ok = true;
    std::vector<std::uint32_t> tj, uj, cur;
    std::vector<std::vector<std::uint32_t>> cofs;
    multisets_up_to(n - 1, n, cur,
                    [&](const std::vector<std::uint32_t>& a) { cofs.push_back(a); });

    for (const auto& a : cofs) {
        if (!ok) break;
        std::uint64_t wa = sum_of(a);
        if (wa > wtotal) continue;
        for (const auto& b : cofs) {
            std::uint64_t wb = sum_of(b);
            if (wa + wb > wtotal) continue;
            std::uint64_t s = wtotal - wa - wb;
            Int acc = 0;
            std::uint64_t klo = s > n ? s - n : 0;
            std::uint64_t khi = std::min<std::uint64_t>(s, n);
            for (std::uint64_t k = klo; k <= khi; ++k) {
                tj.assign(a.begin(), a.end());
                tj.push_back(static_cast<std::uint32_t>(k));
                uj.assign(b.begin(), b.end());
                uj.push_back(static_cast<std::uint32_t>(s - k));
                Int phi = functional_value(n, tj, uj);
                if (phi != 0)
                    acc += binomial(static_cast<unsigned long>(s),
                                    static_cast<unsigned long>(k)) *
                           phi;
            }
            if (acc != 0) {
                ok = false;
                break;
            }
        }
    }
    sweep_ok_[n] = ok;
    return ok;
}

std::optional<bool> PairMarginFunctional::try_nonmember(std::uint32_t i, std::uint32_t j,
                                                        std::uint32_t q) {
    std::uint32_t n = i + j;
    if (n == 0 || q == 0 || q > n) return std::nullopt;
    if (!functional_kills_ideal(n)) return std::nullopt;

    // membership of (T_i U_j)^q would force (T_i U_j)^n into the verified
    // slice, where phi vanishes; a nonzero value rules it out
    std::vector<std::uint32_t> tj(n, i), uj(n, j);
    if (functional_value(n, tj, uj) != 0) return false;
    return std::nullopt;
}

} // namespace ritt
