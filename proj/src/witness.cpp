#include "ritt/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ritt/modular.hpp"

namespace ritt {

namespace {

void multisets_in_window(std::uint32_t len, std::uint32_t lo, std::uint32_t hi,
                         std::vector<std::uint32_t>& cur,
                         const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (len == 0) {
        emit(cur);
        return;
    }
    std::uint32_t start = cur.empty() ? lo : std::max(lo, cur.back());
    for (std::uint32_t v = start; v <= hi; ++v) {
        cur.push_back(v);
        multisets_in_window(len - 1, lo, hi, cur, emit);
        cur.pop_back();
    }
}

// all cofactor monomials for one generator inside the jet window, with any
// weight <= wmax; true when the row cap was hit
bool window_cofactors(const Ring& ring, const std::vector<std::uint32_t>& mdeg,
                      std::uint64_t wmax, const std::vector<std::uint32_t>& lo,
                      const std::vector<std::uint32_t>& hi, std::uint64_t row_cap,
                      std::vector<Monomial>& out) {
    std::vector<Monomial::Entry> entries;
    bool overflow = false;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t fam, std::uint64_t wleft) {
        if (overflow) return;
        if (fam == ring.family_count()) {
            out.push_back(Monomial::from_entries(entries));
            if (out.size() > row_cap) overflow = true;
            return;
        }
        std::vector<std::uint32_t> cur;
        multisets_in_window(
            mdeg[fam], lo[fam], hi[fam], cur, [&](const std::vector<std::uint32_t>& jets) {
                std::uint64_t w = 0;
                for (auto x : jets) w += x;
                if (w > wleft || overflow) return;
                std::size_t mark = entries.size();
                for (auto x : jets)
                    entries.emplace_back(VarId{static_cast<std::uint32_t>(fam), x}, 1);
                rec(fam + 1, wleft - w);
                entries.resize(mark);
            });
    };
    rec(0, wmax);
    return overflow;
}

} // namespace

std::optional<bool> windowed_membership_witness(const Ring& ring, const DiffPoly& f,
                                                const std::vector<DiffPoly>& gens,
                                                const std::vector<std::uint32_t>& centers,
                                                const CertificatePolicy& policy) {
    if (!policy.enabled) return std::nullopt;
    Grade grade = grade_of(ring, f);
    std::size_t nf = ring.family_count();

    for (std::uint32_t delta = 1; delta <= policy.max_window; ++delta) {
        // gather window rows as polynomials
        std::vector<DiffPoly> rows;
        bool too_big = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Grade gg = grade_of(ring, g);
            bool fits = gg.weight <= grade.weight;
            std::vector<std::uint32_t> mdeg(nf);
            for (std::size_t fam = 0; fam < nf && fits; ++fam) {
                if (gg.multidegree[fam] > grade.multidegree[fam]) fits = false;
                else mdeg[fam] = grade.multidegree[fam] - gg.multidegree[fam];
            }
            if (!fits) continue;
            std::vector<std::uint32_t> lo(nf), hi(nf);
            for (std::size_t fam = 0; fam < nf; ++fam) {
                lo[fam] = centers[fam] > delta ? centers[fam] - delta : 0;
                hi[fam] = centers[fam] + delta;
            }
            std::vector<Monomial> ms;
            if (window_cofactors(ring, mdeg, grade.weight - gg.weight, lo, hi,
                                 policy.max_window_rows, ms)) {
                // hit the row cap; a wider window would only be bigger
                too_big = true;
                break;
            }
            std::vector<DiffPoly> dcache{g};
            for (const auto& m : ms) {
                std::uint64_t wm = m.weight();
                std::uint64_t s = grade.weight - gg.weight - wm;
                while (dcache.size() <= s) dcache.push_back(derive(dcache.back()));
                rows.push_back(poly_mul(DiffPoly::term(m, 1), dcache[s]));
            }
        }
        if (too_big) break;
        if (rows.empty()) continue;

        // local column space: every monomial named by the rows or by f
        std::set<Monomial> cols;
        for (const auto& r : rows)
            for (auto& [m, c] : r.terms()) cols.insert(m);
        for (auto& [m, c] : f.terms()) cols.insert(m);
        std::vector<Monomial> basis(cols.begin(), cols.end());

        std::vector<SparseRow> srows;
        srows.reserve(rows.size());
        for (const auto& r : rows) srows.push_back(row_of(r, basis));
        sort_rows_for_elimination(srows);

        Echelon ech(static_cast<std::uint32_t>(basis.size()));
        for (auto& r : srows) ech.insert(std::move(r));
        if (ech.reduces_to_zero(row_of(f, basis))) return true;
    }
    return std::nullopt;
}

std::optional<bool> functional_nonmember_certificate(const Ring& ring, const DiffPoly& f,
                                                     const std::vector<DiffPoly>& gens,
                                                     const SliceLimits& limits,
                                                     const CertificatePolicy& policy) {
    if (!policy.enabled) return std::nullopt;
    Grade grade = grade_of(ring, f);
    if (slice_size(ring, grade) > std::min<std::uint64_t>(limits.max_basis, policy.discovery_max_basis))
        return std::nullopt;

    SliceProblem sp = build_slice_problem(ring, gens, grade, limits);
    const std::uint32_t ncols = static_cast<std::uint32_t>(sp.basis.size());
    SparseRow frow = row_of(f, sp.basis);

    // rows that bring a fresh leading column go in first; the rest feed the
    // discovery loop lazily, so dependent rows are mostly never eliminated
    std::vector<std::size_t> fresh, rest;
    {
        std::vector<bool> seen(ncols, false);
        for (std::size_t r = 0; r < sp.rows.size(); ++r) {
            if (!sp.rows[r].empty() && !seen[sp.rows[r].lead()]) {
                seen[sp.rows[r].lead()] = true;
                fresh.push_back(r);
            } else {
                rest.push_back(r);
            }
        }
    }

    ModEchelon ech(ncols);
    for (std::size_t r : fresh) ech.insert(ModEchelon::from_sparse(sp.rows[r]));
    std::size_t next_rest = 0;

    auto insert_chunk = [&]() -> bool {
        if (next_rest >= rest.size()) return false;
        std::size_t end = std::min(rest.size(), next_rest + policy.insert_chunk);
        for (; next_rest < end; ++next_rest)
            ech.insert(ModEchelon::from_sparse(sp.rows[rest[next_rest]]));
        return true;
    };

    ModEchelon::Row fmod = ModEchelon::from_sparse(frow);

    for (std::uint32_t round = 0; round < policy.discovery_rounds; ++round) {
        // candidate free columns, those carrying f first
        std::vector<std::uint32_t> free_cols;
        for (std::uint32_t c : fmod.cols)
            if (!ech.is_pivot(c)) free_cols.push_back(c);
        for (std::uint32_t c = 0; c < ncols && free_cols.size() < 64; ++c)
            if (!ech.is_pivot(c)) free_cols.push_back(c);

        bool tried_any = false;
        for (std::uint32_t fc : free_cols) {
            auto x = ech.null_vector(fc);
            unsigned __int128 acc = 0;
            for (std::size_t k = 0; k < fmod.cols.size(); ++k)
                acc += ModEchelon::mul(fmod.vals[k], x[fmod.cols[k]]);
            if (acc % ModEchelon::P == 0) continue; // useless for this f
            tried_any = true;

            // lift to an exact rational vector, then clear denominators
            std::vector<Rat> lifted(ncols, Rat(0));
            Int den_lcm = 1;
            bool ok = true;
            for (std::uint32_t c = 0; c < ncols && ok; ++c) {
                if (x[c] == 0) continue;
                auto q = reconstruct_rational(x[c]);
                if (!q) { ok = false; break; }
                lifted[c] = *q;
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den().get_mpz_t());
            }
            if (!ok) continue;
            std::vector<Int> phi(ncols, 0);
            for (std::uint32_t c = 0; c < ncols; ++c)
                if (lifted[c] != 0)
                    phi[c] = lifted[c].get_num() * (den_lcm / lifted[c].get_den());

            // exact verification against every ideal row
            std::int64_t violator = -1;
            for (std::size_t r = 0; r < sp.rows.size(); ++r) {
                Int acc2 = 0;
                const SparseRow& row = sp.rows[r];
                for (std::size_t k = 0; k < row.cols.size(); ++k)
                    if (phi[row.cols[k]] != 0)
                        mpz_addmul(acc2.get_mpz_t(), row.vals[k].get_mpz_t(),
                                   phi[row.cols[k]].get_mpz_t());
                if (acc2 != 0) { violator = static_cast<std::int64_t>(r); break; }
            }
            if (violator >= 0) {
                ech.insert(ModEchelon::from_sparse(sp.rows[static_cast<std::size_t>(violator)]));
                break; // regenerate candidates
            }
            Int on_f = 0;
            for (std::size_t k = 0; k < frow.cols.size(); ++k)
                if (phi[frow.cols[k]] != 0)
                    mpz_addmul(on_f.get_mpz_t(), frow.vals[k].get_mpz_t(),
                               phi[frow.cols[k]].get_mpz_t());
            if (on_f != 0) return false; // certified: f is outside the span
        }
        if (!tried_any && !insert_chunk()) break;
    }
    return std::nullopt;
}

} // namespace ritt
