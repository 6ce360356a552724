#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ritt/diffpoly.hpp"
#include "ritt/errors.hpp"
#include "ritt/exact_rank.hpp"
#include "ritt/varid.hpp"

namespace ritt {

/// A point of the (multidegree, weight) bigrading.
struct Grade {
    std::vector<std::uint32_t> multidegree; // indexed by family id
    std::uint64_t weight = 0;

    friend bool operator==(const Grade&, const Grade&) = default;
    friend auto operator<=>(const Grade& a, const Grade& b) {
        if (auto c = a.weight <=> b.weight; c != 0) return c;
        return a.multidegree <=> b.multidegree;
    }
};

/// Grade of a homogeneous nonzero polynomial; throws std::invalid_argument
/// for zero or inhomogeneous input.
Grade grade_of(const Ring& ring, const DiffPoly& f);

/// Number of monomials of the given grade (product of bounded-part
/// partition counts); saturates at the maximum representable value.
std::uint64_t slice_size(const Ring& ring, const Grade& grade);

/// All monomials of the grade, in canonical order. Subject to limits.
std::vector<Monomial> enumerate_slice(const Ring& ring, const Grade& grade,
                                      const SliceLimits& limits = {});

/// All products m * derive_n(g) landing exactly in the target grade, for
/// homogeneous generators g. These span the slice of the differential
/// ideal [gens] at this grade.
std::vector<DiffPoly> ideal_slice_generators(const Ring& ring,
                                             const std::vector<DiffPoly>& gens,
                                             const Grade& grade,
                                             const SliceLimits& limits = {});

/// One graded slice, ready for exact elimination: its monomial basis in
/// canonical order and the ideal rows as integer coefficient vectors
/// (denominators cleared, deduplicated, deterministically ordered).
struct SliceProblem {
    Grade grade;
    std::vector<Monomial> basis;
    std::vector<SparseRow> rows;
};

SliceProblem build_slice_problem(const Ring& ring, const std::vector<DiffPoly>& gens,
                                 const Grade& grade, const SliceLimits& limits = {});

/// Coefficient row of f over the (sorted) basis, denominators cleared.
SparseRow row_of(const DiffPoly& f, const std::vector<Monomial>& basis);

/// Rank over Q of homogeneous rows sharing one grade (0 for empty input).
std::size_t slice_rank(const Ring& ring, const std::vector<DiffPoly>& rows,
                       const SliceLimits& limits = {});

struct MembershipStats {
    std::uint64_t basis_size = 0;
    std::int64_t ideal_rank = -1; // -1 when elimination stopped early
};

/// True iff homogeneous f lies in the Q-span of the ideal slice of [gens]
/// at grade(f), i.e. rank(G) == rank(G + {f}).
bool is_member(const Ring& ring, const DiffPoly& f, const std::vector<DiffPoly>& gens,
               const SliceLimits& limits = {}, MembershipStats* stats = nullptr);

/// dim of the grade component of k{B}/[gens].
std::uint64_t quotient_slice_dim(const Ring& ring, const std::vector<DiffPoly>& gens,
                                 const Grade& grade, const SliceLimits& limits = {});

} // namespace ritt
