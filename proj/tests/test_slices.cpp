#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ritt/parse.hpp"
#include "ritt/slices.hpp"

using namespace ritt;

namespace {

Ring ringT() { return Ring({"T"}); }
Ring ringTU() { return Ring({"T", "U"}); }
DiffPoly P(const Ring& r, const std::string& s) { return parse_poly(s, r); }

// Independent membership oracle: set up the full linear system
// sum_r x_r * row_r = f over the slice basis and decide consistency by
// plain rational Gaussian elimination (no fraction-free tricks, no shared
// code with the production kernel beyond slice enumeration).
bool member_oracle(const Ring& ring, const DiffPoly& f, const std::vector<DiffPoly>& gens) {
    Grade g = grade_of(ring, f);
    auto basis = enumerate_slice(ring, g);
    REQUIRE(basis.size() <= 200);
    auto rows = ideal_slice_generators(ring, gens, g);

    auto coeff = [&](const DiffPoly& p, const Monomial& m) -> Rat {
        auto it = p.terms().find(m);
        return it == p.terms().end() ? Rat(0) : it->second;
    };
    // matrix: one equation per basis monomial, one column per generator row,
    // augmented with f
    std::size_t ne = basis.size(), nc = rows.size();
    std::vector<std::vector<Rat>> a(ne, std::vector<Rat>(nc + 1, Rat(0)));
    for (std::size_t e = 0; e < ne; ++e) {
        for (std::size_t c = 0; c < nc; ++c) a[e][c] = coeff(rows[c], basis[e]);
        a[e][nc] = coeff(f, basis[e]);
    }
    std::size_t piv_row = 0;
    for (std::size_t col = 0; col < nc && piv_row < ne; ++col) {
        std::size_t sel = piv_row;
        while (sel < ne && a[sel][col] == 0) ++sel;
        if (sel == ne) continue;
        std::swap(a[sel], a[piv_row]);
        for (std::size_t e = 0; e < ne; ++e) {
            if (e == piv_row || a[e][col] == 0) continue;
            Rat factor = a[e][col] / a[piv_row][col];
            for (std::size_t c = col; c <= nc; ++c) a[e][c] -= factor * a[piv_row][c];
        }
        ++piv_row;
    }
    // inconsistent iff some zero row in the coefficient part has nonzero rhs
    for (std::size_t e = 0; e < ne; ++e) {
        bool zero = true;
        for (std::size_t c = 0; c < nc; ++c)
            if (a[e][c] != 0) { zero = false; break; }
        if (zero && a[e][nc] != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("enumerate_slice examples") {
    Ring r = ringT();
    auto s = enumerate_slice(r, Grade{{2}, 2});
    REQUIRE(s.size() == 2);
    CHECK(to_string(s[0], r) == "T_0*T_2");
    CHECK(to_string(s[1], r) == "T_1^2");
    CHECK(enumerate_slice(r, Grade{{1}, 0}).size() == 1);
    CHECK(enumerate_slice(r, Grade{{0}, 1}).empty());
    CHECK(slice_size(r, Grade{{11}, 44}) == 36043);
}

TEST_CASE("ideal slice generators") {
    Ring r = ringT();
    std::vector<DiffPoly> gens{P(r, "T_0^2")};
    auto rows = ideal_slice_generators(r, gens, Grade{{2}, 2});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == P(r, "2*T_0*T_2 + 2*T_1^2"));
    CHECK(ideal_slice_generators(r, gens, Grade{{1}, 5}).empty());

    Ring r2 = ringTU();
    std::vector<DiffPoly> gtu{P(r2, "T_0*U_0")};
    auto rows2 = ideal_slice_generators(r2, gtu, Grade{{1, 1}, 1});
    REQUIRE(rows2.size() == 1);
    CHECK(rows2[0] == P(r2, "T_1*U_0 + T_0*U_1"));
}

TEST_CASE("slice_rank examples") {
    Ring r = ringT();
    CHECK(slice_rank(r, {P(r, "T_0*T_2 + T_1^2"), P(r, "2*T_0*T_2 + 2*T_1^2")}) == 1);
    CHECK(slice_rank(r, {}) == 0);
    CHECK(slice_rank(r, {P(r, "T_0*T_2"), P(r, "T_1^2")}) == 2);
    CHECK_THROWS_AS(slice_rank(r, {P(r, "T_0"), P(r, "T_1")}), std::invalid_argument);
}

TEST_CASE("membership examples") {
    Ring r = ringT();
    std::vector<DiffPoly> gens{P(r, "T_0^2")};
    CHECK_FALSE(is_member(r, P(r, "T_1^2"), gens));
    CHECK(is_member(r, P(r, "T_1^3"), gens));
    Ring r2 = ringTU();
    std::vector<DiffPoly> gtu{P(r2, "T_0*U_0")};
    CHECK(is_member(r2, P(r2, "T_1*U_0 + T_0*U_1"), gtu));
    CHECK_THROWS_AS(is_member(r, P(r, "T_0 + T_1^2"), gens), std::invalid_argument);
    CHECK_THROWS_AS(is_member(r, DiffPoly::zero(), gens), std::invalid_argument);
}

TEST_CASE("quotient dimensions") {
    Ring r = ringT();
    CHECK(quotient_slice_dim(r, {P(r, "T_0^2")}, Grade{{2}, 2}) == 1);
    CHECK(quotient_slice_dim(r, {}, Grade{{3}, 4}) == slice_size(r, Grade{{3}, 4}));
    CHECK(quotient_slice_dim(r, {P(r, "T_0")}, Grade{{1}, 3}) == 0);
}

TEST_CASE("quotient dim invariant under permuting and scaling generators") {
    Ring r = ringTU();
    std::vector<DiffPoly> g1{P(r, "T_0*U_0"), P(r, "T_0^2")};
    std::vector<DiffPoly> g2{Rat(7, 3) * P(r, "T_0^2"), Rat(-2) * P(r, "T_0*U_0")};
    for (std::uint32_t dt = 0; dt <= 3; ++dt)
        for (std::uint32_t du = 0; du <= 2; ++du)
            for (std::uint64_t w = 0; w <= 4; ++w)
                CHECK(quotient_slice_dim(r, g1, Grade{{dt, du}, w}) ==
                      quotient_slice_dim(r, g2, Grade{{dt, du}, w}));
}

TEST_CASE("membership matches the dense rational oracle") {
    std::mt19937_64 rng(1729);
    Ring r = ringT();
    Ring r2 = ringTU();
    int checked = 0;
    while (checked < 50) {
        bool pair = rng() % 2;
        const Ring& ring = pair ? r2 : r;
        std::vector<DiffPoly> gens;
        if (pair) gens.push_back(P(r2, "T_0*U_0"));
        else gens.push_back(P(r, rng() % 2 ? "T_0^2" : "T_0^3"));

        std::uint32_t deg = 2 + rng() % 3;
        std::uint64_t w = rng() % 7;
        Grade grade = pair ? Grade{{deg, 1 + std::uint32_t(rng() % 2)}, w} : Grade{{deg}, w};
        if (slice_size(ring, grade) == 0 || slice_size(ring, grade) > 200) continue;
        auto basis = enumerate_slice(ring, grade);

        DiffPoly f;
        if (rng() % 2) {
            // random slice element
            for (auto& m : basis)
                if (rng() % 3 == 0)
                    f.add_term(m, Rat(std::int64_t(rng() % 11) - 5, 1 + std::int64_t(rng() % 3)));
        } else {
            // random element of the ideal slice (exercises the member branch)
            auto rows = ideal_slice_generators(ring, gens, grade);
            for (auto& row : rows)
                if (rng() % 4 == 0)
                    f += Rat(std::int64_t(rng() % 7) - 3, 1) * row;
        }
        if (f.is_zero()) continue;
        CHECK(is_member(ring, f, gens) == member_oracle(ring, f, gens));
        ++checked;
    }
}

TEST_CASE("differential ideal closure: members stay members") {
    std::mt19937_64 rng(5150);
    Ring r = ringTU();
    std::vector<DiffPoly> gens{P(r, "T_0*U_0")};
    for (int it = 0; it < 10; ++it) {
        Grade grade{{1 + std::uint32_t(rng() % 2), 1 + std::uint32_t(rng() % 2)},
                    1 + (rng() % 3)};
        auto rows = ideal_slice_generators(r, gens, grade);
        if (rows.empty()) continue;
        DiffPoly f;
        for (auto& row : rows)
            f += Rat(std::int64_t(rng() % 5) - 2, 1) * row;
        if (f.is_zero()) continue;
        REQUIRE(is_member(r, f, gens));
        CHECK(is_member(r, derive(f), gens));
        Monomial m = Monomial::var(r.var("T", std::uint32_t(rng() % 3)));
        CHECK(is_member(r, poly_mul(DiffPoly::term(m, 1), f), gens));
    }
}

TEST_CASE("slice ceiling raises a resource error") {
    Ring r = ringT();
    SliceLimits tight;
    tight.max_basis = 10;
    CHECK_THROWS_AS(enumerate_slice(r, Grade{{10}, 30}, tight), ResourceExceeded);
    CHECK_THROWS_AS(
        is_member(r, P(r, "T_1^10"), std::vector<DiffPoly>{P(r, "T_0^2")}, tight),
        ResourceExceeded);
}
