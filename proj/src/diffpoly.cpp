#include "ritt/diffpoly.hpp"

namespace ritt {

std::optional<DiffPoly::GradeInfo> DiffPoly::homogeneous_grade(std::size_t family_count) const {
    if (terms_.empty()) return std::nullopt;
    GradeInfo g;
    g.multidegree.assign(family_count, 0);
    bool first = true;
    for (auto& [m, c] : terms_) {
        GradeInfo h;
        h.multidegree.assign(family_count, 0);
        for (auto& [v, e] : m.entries()) {
            if (v.family >= family_count) return std::nullopt;
            h.multidegree[v.family] += e;
        }
        h.weight = m.weight();
        if (first) { g = h; first = false; }
        else if (!(g == h)) return std::nullopt;
    }
    return g;
}

DiffPoly poly_mul(const DiffPoly& f, const DiffPoly& g) {
    DiffPoly r;
    for (auto& [mf, cf] : f.terms())
        for (auto& [mg, cg] : g.terms())
            r.add_term(mf * mg, cf * cg);
    return r;
}

DiffPoly derive(const DiffPoly& f) {
    DiffPoly r;
    for (auto& [m, c] : f.terms()) {
        for (auto& [v, e] : m.entries()) {
            // d/d(a_i) step: e * a_i^(e-1) * a_{i+1} * rest
            Monomial d = m.divide_var(v) * Monomial::var(VarId{v.family, v.jet + 1});
            r.add_term(d, c * e);
        }
    }
    return r;
}

DiffPoly derive_n(DiffPoly f, unsigned n) {
    for (unsigned k = 0; k < n; ++k) f = derive(f);
    return f;
}

} // namespace ritt
