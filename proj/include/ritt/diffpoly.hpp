#pragma once

#include <map>
#include <optional>

#include "ritt/monomial.hpp"
#include "ritt/rational.hpp"

namespace ritt {

/// Element of k{B}: finitely supported map Monomial -> exact rational.
/// Zero coefficients are never stored.
class DiffPoly {
public:
    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly{}; }
    static DiffPoly constant(const Rat& c) { return term(Monomial{}, c); }
    static DiffPoly term(const Monomial& m, const Rat& c) {
        DiffPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    static DiffPoly var(VarId v) { return term(Monomial::var(v), 1); }

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    DiffPoly& operator+=(const DiffPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    DiffPoly& operator-=(const DiffPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { a += b; return a; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { a -= b; return a; }

    friend DiffPoly operator*(const Rat& c, const DiffPoly& p) {
        DiffPoly r;
        if (c == 0) return r;
        for (auto& [m, q] : p.terms_) r.terms_.emplace(m, c * q);
        return r;
    }

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

    /// (multidegree per family, weight) of a homogeneous polynomial;
    /// nullopt for 0 or an inhomogeneous value.
    struct GradeInfo {
        std::vector<std::uint32_t> multidegree;
        std::uint64_t weight = 0;
        friend bool operator==(const GradeInfo&, const GradeInfo&) = default;
    };
    std::optional<GradeInfo> homogeneous_grade(std::size_t family_count) const;

private:
    std::map<Monomial, Rat> terms_;
};

DiffPoly poly_mul(const DiffPoly& f, const DiffPoly& g);

/// Leibniz extension of the derivation a_i -> a_{i+1}.
DiffPoly derive(const DiffPoly& f);
DiffPoly derive_n(DiffPoly f, unsigned n);

} // namespace ritt
