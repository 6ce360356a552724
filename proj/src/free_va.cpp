#include "ritt/free_va.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace ritt {

namespace {

// weight offset forced by the locality matrix on a word with the given
// letter counts: entry k of letter t carries jet m_k + offset, offset
// collecting |N| against every earlier entry
std::uint64_t locality_offset(const LocalitySpec& spec, const std::vector<std::uint32_t>& deg) {
    std::uint64_t off = 0;
    for (std::size_t t = 0; t < deg.size(); ++t) {
        if (deg[t] == 0) continue;
        std::uint64_t prior = 0;
        for (std::size_t s = 0; s < t; ++s)
            prior += std::uint64_t(deg[s]) * std::uint64_t(-spec.N[t][s]);
        off += std::uint64_t(deg[t]) * prior;
        off += std::uint64_t(deg[t]) * (deg[t] - 1) / 2 * std::uint64_t(-spec.N[t][t]);
    }
    return off;
}

void for_each_multidegree(std::size_t nletters, std::uint32_t degree_bound,
                          const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    std::vector<std::uint32_t> deg(nletters, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t t, std::uint32_t left) {
        if (t == nletters) {
            emit(deg);
            return;
        }
        for (std::uint32_t d = 0; d <= left; ++d) {
            deg[t] = d;
            rec(t + 1, left - d);
        }
        deg[t] = 0;
    };
    rec(0, degree_bound);
}

} // namespace

void check_gates(const LocalitySpec& spec) {
    std::size_t n = spec.letters.size();
    if (n == 0) throw std::invalid_argument("locality spec needs at least one letter");
    if (spec.N.size() != n) throw std::invalid_argument("locality matrix size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (spec.N[a].size() != n) throw std::invalid_argument("locality matrix size mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            if (spec.N[a][b] != spec.N[b][a])
                throw std::invalid_argument("locality matrix must be symmetric");
            if (spec.N[a][b] > 0)
                throw std::invalid_argument(
                    "positive locality bound N(" + spec.letters[a] + "," + spec.letters[b] +
                    "): the algebra is not commutative");
        }
        if (spec.N[a][a] % 2 != 0)
            throw std::invalid_argument("odd diagonal locality bound N(" + spec.letters[a] + "," +
                                        spec.letters[a] + "): super-case not supported");
    }
}

Ring spec_ring(const LocalitySpec& spec) { return Ring(spec.letters); }

LocalitySpec locality_spec_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    LocalitySpec spec;
    spec.letters = doc.at("letters").get<std::vector<std::string>>();
    spec.N = doc.at("N").get<std::vector<std::vector<int>>>();
    check_gates(spec);
    return spec;
}

std::map<Grade, std::uint64_t> enumerate_basis(const LocalitySpec& spec,
                                               std::uint64_t weight_bound,
                                               std::uint32_t degree_bound) {
    check_gates(spec);
    std::map<Grade, std::uint64_t> counts;
    for_each_multidegree(spec.letters.size(), degree_bound, [&](const std::vector<std::uint32_t>& deg) {
        std::uint64_t off = locality_offset(spec, deg);
        if (off > weight_bound) return;
        // remaining weight is distributed as one free multiset of
        // non-negative shifts per letter; enumerate them literally
        std::vector<std::uint64_t> layer(weight_bound - off + 1, 0);
        layer[0] = 1;
        // convolve per letter: partitions into at most deg[t] parts,
        // generated by explicit weakly increasing tuples
        for (std::size_t t = 0; t < deg.size(); ++t) {
            if (deg[t] == 0) continue;
            std::vector<std::uint64_t> counts_t(layer.size(), 0);
            std::function<void(std::uint32_t, std::uint64_t, std::uint64_t)> tuples =
                [&](std::uint32_t slots, std::uint64_t minv, std::uint64_t sum) {
                    if (slots == 0) {
                        ++counts_t[sum];
                        return;
                    }
                    for (std::uint64_t v = minv; sum + v * slots < layer.size(); ++v)
                        tuples(slots - 1, v, sum + v);
                };
            tuples(deg[t], 0, 0);
            std::vector<std::uint64_t> next(layer.size(), 0);
            for (std::size_t w = 0; w < layer.size(); ++w)
                if (layer[w])
                    for (std::size_t v = 0; w + v < layer.size(); ++v)
                        next[w + v] += layer[w] * counts_t[v];
            layer.swap(next);
        }
        for (std::size_t w = 0; w < layer.size(); ++w)
            if (layer[w]) counts[Grade{deg, off + w}] += layer[w];
    });
    return counts;
}

std::vector<DiffPoly> jet_ideal_generators(const LocalitySpec& spec) {
    check_gates(spec);
    Ring ring = spec_ring(spec);
    std::vector<DiffPoly> gens;
    for (std::uint32_t a = 0; a < spec.letters.size(); ++a) {
        for (std::uint32_t b = a; b < spec.letters.size(); ++b) {
            int bound = -spec.N[a][b];
            for (int s = 0; s < bound; ++s) {
                Monomial m = Monomial::var(VarId{a, static_cast<std::uint32_t>(s)}) *
                             Monomial::var(VarId{b, 0});
                gens.push_back(DiffPoly::term(m, 1));
            }
        }
    }
    return gens;
}

namespace {

bool grades_agree(const LocalitySpec& spec, const std::vector<DiffPoly>& gens,
                  std::uint64_t weight_bound, std::uint32_t degree_bound,
                  const SliceLimits& limits, std::optional<Grade>* first_bad,
                  const std::map<Grade, std::uint64_t>& expected) {
    Ring ring = spec_ring(spec);
    // walk grades in (weight, multidegree) order so the least discrepancy
    // is found first
    std::vector<std::vector<std::uint32_t>> degs;
    for_each_multidegree(spec.letters.size(), degree_bound,
                         [&](const std::vector<std::uint32_t>& d) { degs.push_back(d); });
    std::sort(degs.begin(), degs.end());
    for (std::uint64_t w = 0; w <= weight_bound; ++w) {
        for (const auto& d : degs) {
            Grade g{d, w};
            std::uint64_t lhs = quotient_slice_dim(ring, gens, g, limits);
            std::uint64_t rhs = 0;
            if (auto it = expected.find(g); it != expected.end()) rhs = it->second;
            if (lhs != rhs) {
                if (first_bad) *first_bad = g;
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool check_jetfree(const LocalitySpec& spec, std::uint64_t weight_bound,
                   std::uint32_t degree_bound, const SliceLimits& limits) {
    auto words = enumerate_basis(spec, weight_bound, degree_bound);
    auto gens = jet_ideal_generators(spec);
    return grades_agree(spec, gens, weight_bound, degree_bound, limits, nullptr, words);
}

CofreeResult check_cofree_iff(const LocalitySpec& spec, std::uint64_t weight_bound,
                              std::uint32_t degree_bound, const SliceLimits& limits) {
    check_gates(spec);
    Ring ring = spec_ring(spec);
    auto gens_locality = jet_ideal_generators(spec);
    // the jet lift of the Zhu Poisson algebra: only the s = 0 quadrics
    std::vector<DiffPoly> gens_zhu;
    for (std::uint32_t a = 0; a < spec.letters.size(); ++a)
        for (std::uint32_t b = a; b < spec.letters.size(); ++b)
            if (spec.N[a][b] <= -1)
                gens_zhu.push_back(DiffPoly::term(
                    Monomial::var(VarId{a, 0}) * Monomial::var(VarId{b, 0}), 1));

    std::vector<std::vector<std::uint32_t>> degs;
    for_each_multidegree(spec.letters.size(), degree_bound,
                         [&](const std::vector<std::uint32_t>& d) { degs.push_back(d); });
    std::sort(degs.begin(), degs.end());

    CofreeResult res;
    for (std::uint64_t w = 0; w <= weight_bound; ++w) {
        for (const auto& d : degs) {
            Grade g{d, w};
            if (quotient_slice_dim(ring, gens_locality, g, limits) !=
                quotient_slice_dim(ring, gens_zhu, g, limits)) {
                res.equal = false;
                res.first_discrepancy = g;
                return res;
            }
        }
    }
    res.equal = true;
    return res;
}

ZhuResult zhu_poisson_dims(const LocalitySpec& spec, std::uint32_t degree_bound) {
    check_gates(spec);
    ZhuResult res;
    // right-hand side: monomials of k[B] avoiding every pair with
    // N(a,b) <= -1 (including squares)
    for_each_multidegree(spec.letters.size(), degree_bound, [&](const std::vector<std::uint32_t>& d) {
        bool allowed = true;
        for (std::size_t a = 0; a < d.size() && allowed; ++a) {
            if (d[a] >= 2 && spec.N[a][a] <= -1) allowed = false;
            for (std::size_t b = a + 1; b < d.size() && allowed; ++b)
                if (d[a] >= 1 && d[b] >= 1 && spec.N[a][b] <= -1) allowed = false;
        }
        res.dims[d] = allowed ? 1 : 0;
    });
    // independent count: basis words whose raw shifts are all -1 and whose
    // derived jet indices all vanish, i.e. the weight-0 layer
    auto words = enumerate_basis(spec, 0, degree_bound);
    res.agree = true;
    for (auto& [d, dim] : res.dims) {
        std::uint64_t w0 = 0;
        if (auto it = words.find(Grade{d, 0}); it != words.end()) w0 = it->second;
        if (w0 != dim) res.agree = false;
    }
    return res;
}

} // namespace ritt
