#include "ritt/exact_rank.hpp"

#include <algorithm>

namespace ritt {

void SparseRow::normalize() {
    if (cols.empty()) return;
    mpz_t g;
    mpz_init(g);
    mpz_set(g, vals.front().get_mpz_t());
    mpz_abs(g, g);
    for (std::size_t i = 1; i < vals.size() && mpz_cmp_ui(g, 1) != 0; ++i)
        mpz_gcd(g, g, vals[i].get_mpz_t());
    bool flip = mpz_sgn(vals.front().get_mpz_t()) < 0;
    if (flip) mpz_neg(g, g);
    if (mpz_cmp_ui(g, 1) != 0) {
        for (auto& v : vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g);
    }
    mpz_clear(g);
}

void Echelon::reduce(SparseRow& r) {
    mpz_t g, a, b, t;
    mpz_inits(g, a, b, t, nullptr);
    while (!r.empty()) {
        std::int32_t pi = pivot_of_col_[r.lead()];
        if (pi < 0) break;
        const SparseRow& p = rows_[static_cast<std::size_t>(pi)];
        // r <- (p_lead/g) * r - (r_lead/g) * p ; the leading entries cancel
        mpz_gcd(g, p.vals.front().get_mpz_t(), r.vals.front().get_mpz_t());
        mpz_divexact(a, p.vals.front().get_mpz_t(), g); // > 0
        mpz_divexact(b, r.vals.front().get_mpz_t(), g);
        scratch_.cols.clear();
        scratch_.vals.clear();
        std::size_t i = 1, j = 1; // both leads cancel
        const std::size_t ni = r.cols.size(), nj = p.cols.size();
        while (i < ni || j < nj) {
            if (j >= nj || (i < ni && r.cols[i] < p.cols[j])) {
                mpz_mul(t, a, r.vals[i].get_mpz_t());
                scratch_.cols.push_back(r.cols[i]);
                scratch_.vals.emplace_back();
                mpz_swap(scratch_.vals.back().get_mpz_t(), t);
                ++i;
            } else if (i >= ni || p.cols[j] < r.cols[i]) {
                mpz_mul(t, b, p.vals[j].get_mpz_t());
                mpz_neg(t, t);
                scratch_.cols.push_back(p.cols[j]);
                scratch_.vals.emplace_back();
                mpz_swap(scratch_.vals.back().get_mpz_t(), t);
                ++j;
            } else {
                mpz_mul(t, a, r.vals[i].get_mpz_t());
                mpz_submul(t, b, p.vals[j].get_mpz_t());
                if (mpz_sgn(t) != 0) {
                    scratch_.cols.push_back(r.cols[i]);
                    scratch_.vals.emplace_back();
                    mpz_swap(scratch_.vals.back().get_mpz_t(), t);
                }
                ++i;
                ++j;
            }
        }
        std::swap(r.cols, scratch_.cols);
        std::swap(r.vals, scratch_.vals);
        r.normalize();
    }
    mpz_clears(g, a, b, t, nullptr);
}

bool Echelon::insert(SparseRow r) {
    r.normalize();
    reduce(r);
    if (r.empty()) return false;
    pivot_of_col_[r.lead()] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool Echelon::reduces_to_zero(SparseRow r) {
    r.normalize();
    reduce(r);
    return r.empty();
}

void sort_rows_for_elimination(std::vector<SparseRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& x, const SparseRow& y) {
        if (x.empty() != y.empty()) return y.empty(); // non-empty rows first
        if (x.empty()) return false;
        if (x.lead() != y.lead()) return x.lead() < y.lead();
        if (x.nnz() != y.nnz()) return x.nnz() < y.nnz();
        if (x.cols != y.cols) return x.cols < y.cols;
        for (std::size_t i = 0; i < x.vals.size(); ++i) {
            int c = mpz_cmp(x.vals[i].get_mpz_t(), y.vals[i].get_mpz_t());
            if (c != 0) return c < 0;
        }
        return false;
    });
}

} // namespace ritt
