#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "ritt/varid.hpp"

namespace ritt {

/// Monomial in jet variables: sorted sparse exponent list, no zero exponents.
///
/// Total order: degree, then weight, then lexicographic comparison of the
/// variable sequence expanded with multiplicity (smaller sequence first).
/// Under this order the slice enumeration and all pivoting are reproducible.
class Monomial {
public:
    using Entry = std::pair<VarId, std::uint32_t>;

    Monomial() = default;

    static Monomial var(VarId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.exps_.emplace_back(v, e);
        return m;
    }

    /// Build from possibly unsorted / duplicated entries.
    static Monomial from_entries(std::vector<Entry> es) {
        std::sort(es.begin(), es.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Monomial m;
        for (auto& [v, e] : es) {
            if (e == 0) continue;
            if (!m.exps_.empty() && m.exps_.back().first == v)
                m.exps_.back().second += e;
            else
                m.exps_.emplace_back(v, e);
        }
        return m;
    }

    const std::vector<Entry>& entries() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (auto& [v, e] : exps_) d += e;
        return d;
    }

    std::uint64_t weight() const {
        std::uint64_t w = 0;
        for (auto& [v, e] : exps_) w += std::uint64_t(v.jet) * e;
        return w;
    }

    std::uint32_t degree_in(std::uint32_t family) const {
        std::uint32_t d = 0;
        for (auto& [v, e] : exps_)
            if (v.family == family) d += e;
        return d;
    }

    std::uint32_t exponent(VarId v) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                                   [](const Entry& a, const VarId& b) { return a.first < b; });
        return (it != exps_.end() && it->first == v) ? it->second : 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() && b != o.exps_.end()) {
            if (a->first < b->first) r.exps_.push_back(*a++);
            else if (b->first < a->first) r.exps_.push_back(*b++);
            else { r.exps_.emplace_back(a->first, a->second + b->second); ++a; ++b; }
        }
        r.exps_.insert(r.exps_.end(), a, exps_.end());
        r.exps_.insert(r.exps_.end(), b, o.exps_.end());
        return r;
    }

    /// this / var^1; exponent must be positive.
    Monomial divide_var(VarId v) const {
        Monomial r = *this;
        for (auto it = r.exps_.begin(); it != r.exps_.end(); ++it) {
            if (it->first == v) {
                if (--it->second == 0) r.exps_.erase(it);
                return r;
            }
        }
        throw std::invalid_argument("divide_var: variable absent");
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        if (auto c = x.weight() <=> y.weight(); c != 0) return c;
        // lex on the multiplicity-expanded variable sequence
        auto a = x.exps_.begin(); auto b = y.exps_.begin();
        std::uint32_t ra = 0, rb = 0; // consumed multiplicity of current entry
        while (a != x.exps_.end() && b != y.exps_.end()) {
            if (auto c = a->first <=> b->first; c != 0) return c;
            std::uint32_t na = a->second - ra, nb = b->second - rb;
            std::uint32_t step = std::min(na, nb);
            ra += step; rb += step;
            if (ra == a->second) { ++a; ra = 0; }
            if (rb == b->second) { ++b; rb = 0; }
        }
        if (a == x.exps_.end() && b == y.exps_.end()) return std::strong_ordering::equal;
        return a == x.exps_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::vector<Entry> exps_;
};

} // namespace ritt
