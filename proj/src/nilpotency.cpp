#include "ritt/nilpotency.hpp"

#include <functional>

#include "ritt/pair_certificates.hpp"

namespace ritt {

namespace {

struct Decision {
    bool member = false;
    WitnessGrade witness;
};

using DecideFn = std::function<Decision(std::uint32_t q)>;

RittAnswer run_search(std::uint32_t predicted, const SearchOptions& opts, const DecideFn& decide,
                      const std::string& what) {
    std::uint32_t cap = opts.cap ? opts.cap : predicted + 2;
    RittAnswer ans;
    ans.predicted = predicted;

    auto test = [&](std::uint32_t q) {
        Decision d = decide(q);
        ans.witnesses.push_back(d.witness);
        return d.member;
    };

    if (opts.fast) {
        // membership is monotone in q, so one clean (false, true) step pins
        // the least index; anything else falls back to the full search
        bool below = predicted >= 2 ? test(predicted - 1) : false;
        if (!below && test(predicted)) {
            ans.found = predicted;
            ans.agree = true;
            return ans;
        }
        ans.witnesses.clear();
    }

    for (std::uint32_t q = 1; q <= cap; ++q) {
        if (test(q)) {
            ans.found = q;
            ans.agree = ans.found == predicted;
            return ans;
        }
    }
    throw SearchCapExceeded(what + ": no membership up to cap " + std::to_string(cap));
}

Decision decide_generic(const Ring& ring, const DiffPoly& f, const std::vector<DiffPoly>& gens,
                        std::uint32_t q, const SliceLimits& limits) {
    Decision d;
    MembershipStats stats;
    d.member = is_member(ring, f, gens, limits, &stats);
    d.witness.q = q;
    d.witness.grade = grade_of(ring, f);
    d.witness.basis_size = stats.basis_size;
    d.witness.ideal_rank = stats.ideal_rank;
    d.witness.member = d.member;
    d.witness.method = stats.ideal_rank < 0 ? "rank-early" : "rank";
    return d;
}

Decision decide_certified(const Ring& ring, const DiffPoly& f, const std::vector<DiffPoly>& gens,
                          std::uint32_t q, std::uint32_t predicted,
                          const std::vector<std::uint32_t>& centers, const SearchOptions& opts,
                          PairMarginFunctional* margin, std::uint32_t mi, std::uint32_t mj) {
    Grade grade = grade_of(ring, f);
    std::uint64_t size = slice_size(ring, grade);
    if (size <= opts.certs.exact_threshold || !opts.certs.enabled)
        return decide_generic(ring, f, gens, q, opts.limits);

    auto make = [&](bool member, const char* method) {
        Decision d;
        d.member = member;
        d.witness = WitnessGrade{q, grade, size, -1, member, method};
        return d;
    };

    // the predicted index only orders the attempts; both certificate kinds
    // are definitive when they fire and silent when they do not
    bool expect_member = q >= predicted;
    for (int attempt = 0; attempt < 2; ++attempt) {
        bool try_membership = (attempt == 0) == expect_member;
        if (try_membership) {
            if (auto r = windowed_membership_witness(ring, f, gens, centers, opts.certs);
                r.has_value())
                return make(*r, "witness");
        } else {
            if (margin && mi + mj >= opts.certs.margin_from) {
                if (auto r = margin->try_nonmember(mi, mj, q); r.has_value())
                    return make(*r, "margin-functional");
            }
            if (auto r = functional_nonmember_certificate(ring, f, gens, opts.limits, opts.certs);
                r.has_value())
                return make(*r, "functional");
        }
    }
    return decide_generic(ring, f, gens, q, opts.limits);
}

} // namespace

RittAnswer q_single(std::uint32_t i, std::uint32_t p, const SearchOptions& opts) {
    if (p < 1) throw std::invalid_argument("q_single requires p >= 1");
    Ring ring({"T"});
    std::vector<DiffPoly> gens{DiffPoly::term(Monomial::var(ring.var("T", 0), p), 1)};
    std::uint32_t predicted = (i + 1) * p - i;
    std::vector<std::uint32_t> centers{i};

    auto decide = [&](std::uint32_t q) {
        DiffPoly f = DiffPoly::term(Monomial::var(ring.var("T", i), q), 1);
        return decide_certified(ring, f, gens, q, predicted, centers, opts, nullptr, 0, 0);
    };
    return run_search(predicted, opts, decide,
                      "q_single(" + std::to_string(i) + "," + std::to_string(p) + ")");
}

RittAnswer q_pair(std::uint32_t i, std::uint32_t j, const SearchOptions& opts) {
    Ring ring({"T", "U"});
    std::vector<DiffPoly> gens{DiffPoly::term(
        Monomial::var(ring.var("T", 0)) * Monomial::var(ring.var("U", 0)), 1)};
    const std::uint32_t predicted = i + j + 1;
    std::vector<std::uint32_t> centers{i, j};
    PairMarginFunctional margin;

    auto decide = [&](std::uint32_t q) {
        DiffPoly f = DiffPoly::term(
            Monomial::var(ring.var("T", i), q) * Monomial::var(ring.var("U", j), q), 1);
        return decide_certified(ring, f, gens, q, predicted, centers, opts, &margin, i, j);
    };
    return run_search(predicted, opts, decide,
                      "q_pair(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

bool verify_proposition_34(std::uint32_t i, std::uint32_t p, const SearchOptions& opts) {
    if (i < 1 || p < 2) throw std::invalid_argument("verify_proposition_34 requires i >= 1, p >= 2");
    Ring ring({"T"});
    std::vector<DiffPoly> gens{DiffPoly::term(Monomial::var(ring.var("T", 0), p), 1)};
    std::uint32_t e = i * (p - 1);
    DiffPoly below = DiffPoly::term(Monomial::var(ring.var("T", i - 1), e), 1);
    DiffPoly at = DiffPoly::term(Monomial::var(ring.var("T", i - 1), e + 1), 1);
    std::vector<std::uint32_t> centers{i - 1};

    auto member_of = [&](const DiffPoly& f, std::uint32_t q, std::uint32_t predicted) {
        return decide_certified(ring, f, gens, q, predicted, centers, opts, nullptr, 0, 0).member;
    };
    // predicted transitions mirror the search: e is expected outside, e+1 inside
    return !member_of(below, e, e + 1) && member_of(at, e + 1, e + 1);
}

} // namespace ritt
