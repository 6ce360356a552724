#include "ritt/slices.hpp"

#include <algorithm>
#include <limits>

namespace ritt {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// partitions of n into at most k parts, saturating
std::uint64_t partition_count(std::uint64_t n, std::uint32_t k) {
    std::vector<std::uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (std::uint32_t part = 1; part <= k; ++part)
        for (std::uint64_t v = part; v <= n; ++v)
            dp[v] = sat_add(dp[v], dp[v - part]);
    return dp[n];
}

// weakly increasing jet tuples of fixed length with given sum
void jet_tuples(std::uint32_t count, std::uint64_t sum, std::uint32_t min_jet,
                std::vector<std::uint32_t>& cur,
                const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (count == 0) {
        if (sum == 0) emit(cur);
        return;
    }
    if (count == 1) {
        if (sum >= min_jet) {
            cur.push_back(static_cast<std::uint32_t>(sum));
            emit(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::uint64_t j = min_jet; j * count <= sum; ++j) {
        cur.push_back(static_cast<std::uint32_t>(j));
        jet_tuples(count - 1, sum - j, static_cast<std::uint32_t>(j), cur, emit);
        cur.pop_back();
    }
}

void check_grade_arity(const Ring& ring, const Grade& grade) {
    if (grade.multidegree.size() != ring.family_count())
        throw std::invalid_argument("grade multidegree arity does not match ring");
}

} // namespace

Grade grade_of(const Ring& ring, const DiffPoly& f) {
    auto g = f.homogeneous_grade(ring.family_count());
    if (!g) throw std::invalid_argument("expected a nonzero homogeneous polynomial");
    return Grade{g->multidegree, g->weight};
}

std::uint64_t slice_size(const Ring& ring, const Grade& grade) {
    check_grade_arity(ring, grade);
    // distribute the weight over the families; per family the monomials are
    // partitions of the weight share into at most deg_f parts
    std::size_t nf = ring.family_count();
    std::vector<std::uint64_t> acc(grade.weight + 1, 0), next(grade.weight + 1, 0);
    acc[0] = 1;
    for (std::size_t f = 0; f < nf; ++f) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint64_t w = 0; w <= grade.weight; ++w) {
            if (acc[w] == 0) continue;
            for (std::uint64_t wf = 0; w + wf <= grade.weight; ++wf) {
                std::uint64_t c = partition_count(wf, grade.multidegree[f]);
                if (c == 0) continue;
                std::uint64_t prod =
                    (acc[w] != 0 && c > std::numeric_limits<std::uint64_t>::max() / acc[w])
                        ? std::numeric_limits<std::uint64_t>::max()
                        : acc[w] * c;
                next[w + wf] = sat_add(next[w + wf], prod);
            }
        }
        std::swap(acc, next);
    }
    return acc[grade.weight];
}

std::vector<Monomial> enumerate_slice(const Ring& ring, const Grade& grade,
                                      const SliceLimits& limits) {
    check_grade_arity(ring, grade);
    std::uint64_t size = slice_size(ring, grade);
    if (size > limits.max_basis)
        throw ResourceExceeded("slice of " + std::to_string(size) +
                               " monomials exceeds ceiling " + std::to_string(limits.max_basis));

    std::vector<Monomial> out;
    out.reserve(size);
    std::size_t nf = ring.family_count();

    // per-family jet multisets, combined over all weight splits
    std::vector<Monomial::Entry> entries;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t f, std::uint64_t wleft) {
        if (f == nf) {
            if (wleft == 0) out.push_back(Monomial::from_entries(entries));
            return;
        }
        std::vector<std::uint32_t> cur;
        for (std::uint64_t wf = 0; wf <= wleft; ++wf) {
            if (f + 1 == nf && wf != wleft) continue;
            jet_tuples(grade.multidegree[f], wf, 0, cur,
                       [&](const std::vector<std::uint32_t>& jets) {
                           std::size_t mark = entries.size();
                           for (std::uint32_t j : jets)
                               entries.emplace_back(VarId{static_cast<std::uint32_t>(f), j}, 1);
                           rec(f + 1, wleft - wf);
                           entries.resize(mark);
                       });
        }
    };
    rec(0, grade.weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiffPoly> ideal_slice_generators(const Ring& ring,
                                             const std::vector<DiffPoly>& gens,
                                             const Grade& grade,
                                             const SliceLimits& limits) {
    check_grade_arity(ring, grade);
    std::vector<DiffPoly> out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Grade gg = grade_of(ring, g);
        bool fits = gg.weight <= grade.weight;
        std::vector<std::uint32_t> mdeg(ring.family_count());
        for (std::size_t f = 0; f < ring.family_count() && fits; ++f) {
            if (gg.multidegree[f] > grade.multidegree[f]) fits = false;
            else mdeg[f] = grade.multidegree[f] - gg.multidegree[f];
        }
        if (!fits) continue;
        std::uint64_t max_n = grade.weight - gg.weight;
        DiffPoly dg = g;
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            if (n > 0) dg = derive(dg);
            Grade mg{mdeg, max_n - n};
            if (slice_size(ring, mg) == 0) continue;
            for (const auto& m : enumerate_slice(ring, mg, limits))
                out.push_back(poly_mul(DiffPoly::term(m, 1), dg));
        }
    }
    return out;
}

SparseRow row_of(const DiffPoly& f, const std::vector<Monomial>& basis) {
    Int den_lcm = 1;
    for (auto& [m, c] : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    SparseRow r;
    r.cols.reserve(f.term_count());
    r.vals.reserve(f.term_count());
    for (auto& [m, c] : f.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m))
            throw std::invalid_argument("row monomial outside slice basis");
        Int v = c.get_num() * (den_lcm / c.get_den());
        r.cols.push_back(static_cast<std::uint32_t>(it - basis.begin()));
        r.vals.push_back(std::move(v));
    }
    // terms() iterates in ascending monomial order, so cols are sorted
    r.normalize();
    return r;
}

namespace {

// m * dg as a sparse row; dg's monomials shift by m
SparseRow shifted_row(const Monomial& m, const DiffPoly& dg,
                      const std::vector<Monomial>& basis) {
    SparseRow r;
    r.cols.reserve(dg.term_count());
    r.vals.reserve(dg.term_count());
    Int den_lcm = 1;
    for (auto& [mm, c] : dg.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<std::pair<std::uint32_t, Int>> tmp;
    tmp.reserve(dg.term_count());
    for (auto& [mm, c] : dg.terms()) {
        Monomial prod = m * mm;
        auto it = std::lower_bound(basis.begin(), basis.end(), prod);
        if (it == basis.end() || !(*it == prod))
            throw std::logic_error("ideal product outside slice basis");
        tmp.emplace_back(static_cast<std::uint32_t>(it - basis.begin()),
                         c.get_num() * (den_lcm / c.get_den()));
    }
    std::sort(tmp.begin(), tmp.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [col, v] : tmp) {
        r.cols.push_back(col);
        r.vals.push_back(std::move(v));
    }
    r.normalize();
    return r;
}

} // namespace

SliceProblem build_slice_problem(const Ring& ring, const std::vector<DiffPoly>& gens,
                                 const Grade& grade, const SliceLimits& limits) {
    SliceProblem sp;
    sp.grade = grade;
    sp.basis = enumerate_slice(ring, grade, limits);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Grade gg = grade_of(ring, g);
        bool fits = gg.weight <= grade.weight;
        std::vector<std::uint32_t> mdeg(ring.family_count());
        for (std::size_t f = 0; f < ring.family_count() && fits; ++f) {
            if (gg.multidegree[f] > grade.multidegree[f]) fits = false;
            else mdeg[f] = grade.multidegree[f] - gg.multidegree[f];
        }
        if (!fits) continue;
        std::uint64_t max_n = grade.weight - gg.weight;
        DiffPoly dg = g;
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            if (n > 0) dg = derive(dg);
            Grade mg{mdeg, max_n - n};
            if (slice_size(ring, mg) == 0) continue;
            for (const auto& m : enumerate_slice(ring, mg, limits))
                sp.rows.push_back(shifted_row(m, dg, sp.basis));
        }
    }
    sort_rows_for_elimination(sp.rows);
    sp.rows.erase(std::unique(sp.rows.begin(), sp.rows.end(),
                              [](const SparseRow& a, const SparseRow& b) {
                                  return a.cols == b.cols && a.vals == b.vals;
                              }),
                  sp.rows.end());
    return sp;
}

std::size_t slice_rank(const Ring& ring, const std::vector<DiffPoly>& rows,
                       const SliceLimits& limits) {
    std::vector<const DiffPoly*> nonzero;
    for (auto& r : rows)
        if (!r.is_zero()) nonzero.push_back(&r);
    if (nonzero.empty()) return 0;
    Grade g = grade_of(ring, *nonzero.front());
    for (auto* r : nonzero)
        if (!(grade_of(ring, *r) == g))
            throw std::invalid_argument("slice_rank: rows of mixed grade");
    auto basis = enumerate_slice(ring, g, limits);
    std::vector<SparseRow> srows;
    srows.reserve(nonzero.size());
    for (auto* r : nonzero) srows.push_back(row_of(*r, basis));
    sort_rows_for_elimination(srows);
    Echelon ech(static_cast<std::uint32_t>(basis.size()));
    for (auto& r : srows) ech.insert(std::move(r));
    return ech.rank();
}

bool is_member(const Ring& ring, const DiffPoly& f, const std::vector<DiffPoly>& gens,
               const SliceLimits& limits, MembershipStats* stats) {
    Grade g = grade_of(ring, f); // rejects zero / inhomogeneous queries
    SliceProblem sp = build_slice_problem(ring, gens, g, limits);
    if (stats) stats->basis_size = sp.basis.size();
    SparseRow frow = row_of(f, sp.basis);

    Echelon ech(static_cast<std::uint32_t>(sp.basis.size()));
    // membership can conclude before the echelon is complete; probe the
    // query row periodically so the common "member" case exits early
    const std::size_t probe_every = 8192;
    std::size_t since_probe = 0;
    for (std::size_t i = 0; i < sp.rows.size(); ++i) {
        ech.insert(std::move(sp.rows[i]));
        if (++since_probe >= probe_every) {
            since_probe = 0;
            if (ech.reduces_to_zero(frow)) {
                if (stats) stats->ideal_rank = -1;
                return true;
            }
        }
    }
    if (stats) stats->ideal_rank = static_cast<std::int64_t>(ech.rank());
    return ech.reduces_to_zero(std::move(frow));
}

std::uint64_t quotient_slice_dim(const Ring& ring, const std::vector<DiffPoly>& gens,
                                 const Grade& grade, const SliceLimits& limits) {
    SliceProblem sp = build_slice_problem(ring, gens, grade, limits);
    Echelon ech(static_cast<std::uint32_t>(sp.basis.size()));
    for (auto& r : sp.rows) ech.insert(std::move(r));
    return sp.basis.size() - ech.rank();
}

} // namespace ritt
