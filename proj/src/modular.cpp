#include "ritt/modular.hpp"

namespace ritt {

namespace {

// fast reduction for p = 2^61 - 1
inline std::uint64_t reduce_mersenne(unsigned __int128 x) {
    std::uint64_t lo = static_cast<std::uint64_t>(x) & ModEchelon::P;
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t s = lo + hi;
    if (s >= ModEchelon::P) s -= ModEchelon::P;
    return s;
}

} // namespace

std::uint64_t ModEchelon::mul(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    if (modulus_ == P) return reduce_mersenne(x);
    return static_cast<std::uint64_t>(x % modulus_);
}

std::uint64_t ModEchelon::inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = modulus_ - 2; // prime modulus
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ModEchelon::Row ModEchelon::from_sparse(const SparseRow& r) const {
    Row m;
    m.cols.reserve(r.cols.size());
    m.vals.reserve(r.cols.size());
    for (std::size_t i = 0; i < r.cols.size(); ++i) {
        std::uint64_t v = mpz_fdiv_ui(r.vals[i].get_mpz_t(), modulus_);
        if (v != 0) {
            m.cols.push_back(r.cols[i]);
            m.vals.push_back(v);
        }
    }
    return m;
}

void ModEchelon::reduce(Row& r) {
    while (!r.empty()) {
        std::int32_t pi = pivot_of_col_[r.lead()];
        if (pi < 0) break;
        const Row& p = rows_[static_cast<std::size_t>(pi)];
        // r <- r - (r_lead / p_lead) * p
        std::uint64_t factor = mul(r.vals.front(), lead_inv_[static_cast<std::size_t>(pi)]);
        scratch_.cols.clear();
        scratch_.vals.clear();
        std::size_t i = 1, j = 1;
        const std::size_t ni = r.cols.size(), nj = p.cols.size();
        while (i < ni || j < nj) {
            if (j >= nj || (i < ni && r.cols[i] < p.cols[j])) {
                scratch_.cols.push_back(r.cols[i]);
                scratch_.vals.push_back(r.vals[i]);
                ++i;
            } else if (i >= ni || p.cols[j] < r.cols[i]) {
                std::uint64_t v = modulus_ - mul(factor, p.vals[j]);
                if (v == modulus_) v = 0;
                if (v != 0) {
                    scratch_.cols.push_back(p.cols[j]);
                    scratch_.vals.push_back(v);
                }
                ++j;
            } else {
                std::uint64_t sub = mul(factor, p.vals[j]);
                std::uint64_t v = r.vals[i] >= sub ? r.vals[i] - sub : r.vals[i] + modulus_ - sub;
                if (v != 0) {
                    scratch_.cols.push_back(r.cols[i]);
                    scratch_.vals.push_back(v);
                }
                ++i;
                ++j;
            }
        }
        std::swap(r.cols, scratch_.cols);
        std::swap(r.vals, scratch_.vals);
    }
}

bool ModEchelon::insert(Row r) {
    reduce(r);
    if (r.empty()) return false;
    pivot_of_col_[r.lead()] = static_cast<std::int32_t>(rows_.size());
    lead_inv_.push_back(inv(r.vals.front()));
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::uint32_t> ModEchelon::pivot_cols() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (std::uint32_t c = 0; c < pivot_of_col_.size(); ++c)
        if (pivot_of_col_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::uint64_t> ModEchelon::null_vector(std::uint32_t free_col) const {
    std::vector<std::uint64_t> x(pivot_of_col_.size(), 0);
    x[free_col] = 1;
    // every pivot row's tail sits strictly right of its lead, so walking
    // the leads in descending order closes the whole system
    std::vector<std::uint32_t> leads = pivot_cols();
    for (auto it = leads.rbegin(); it != leads.rend(); ++it) {
        const Row& row = rows_[static_cast<std::size_t>(pivot_of_col_[*it])];
        unsigned __int128 acc = 0;
        for (std::size_t k = 1; k < row.cols.size(); ++k) {
            if (x[row.cols[k]] == 0) continue;
            acc += mul(row.vals[k], x[row.cols[k]]);
        }
        std::uint64_t s = static_cast<std::uint64_t>(acc % modulus_);
        if (s == 0) continue;
        // lead * x_lead + s = 0
        x[*it] = mul(modulus_ - s, lead_inv_[static_cast<std::size_t>(pivot_of_col_[*it])]);
    }
    return x;
}

std::vector<std::uint64_t> discovery_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    out.push_back(ModEchelon::P);
    Int p = Int(1) << 61;
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(mpz_get_ui(p.get_mpz_t()));
    }
    return out;
}

std::optional<Rat> reconstruct_rational(const Int& residue, const Int& modulus) {
    Int bound;
    mpz_fdiv_q_ui(bound.get_mpz_t(), modulus.get_mpz_t(), 2);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());

    Int r0 = modulus, r1 = residue % modulus, t0 = 0, t1 = 1, q, tmp;
    if (r1 < 0) r1 += modulus;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (t1 == 0) return std::nullopt;
    Int den = t1 < 0 ? Int(-t1) : t1;
    if (den > bound) return std::nullopt;
    Int num = t1 < 0 ? Int(-r1) : r1;
    Rat out(num, den);
    out.canonicalize();
    return out;
}

} // namespace ritt
