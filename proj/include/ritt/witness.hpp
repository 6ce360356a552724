#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ritt/slices.hpp"

namespace ritt {

struct CertificatePolicy {
    bool enabled = true;
    // slices up to this many monomials are decided by the exact rank kernel
    std::uint64_t exact_threshold = 800;
    // pair queries with i + j >= this use the margin-count functional
    std::uint32_t margin_from = 5;
    // windowed witness search: jet window half-widths tried in turn, and a
    // cap on the number of window rows
    std::uint32_t max_window = 4;
    std::uint64_t max_window_rows = 250000;
    // functional discovery: insertion chunking and retry rounds
    std::uint32_t discovery_rounds = 64;
    std::uint64_t insert_chunk = 4096;
    // functional discovery materializes the slice; skip it beyond this
    std::uint64_t discovery_max_basis = 120000;
};

/// Membership witness from a windowed subproblem: f is reduced against the
/// ideal rows m * derive^s(g) whose cofactor m has every jet within
/// [centers[family] - delta, centers[family] + delta]. A zero reduction is
/// a definitive membership certificate; anything else proves nothing.
std::optional<bool> windowed_membership_witness(const Ring& ring, const DiffPoly& f,
                                                const std::vector<DiffPoly>& gens,
                                                const std::vector<std::uint32_t>& centers,
                                                const CertificatePolicy& policy = {});

/// Non-membership by an exactly verified functional: a null vector of the
/// ideal slice is discovered mod p, reconstructed over Q, and then checked
/// with exact arithmetic against every ideal row; if it also takes a
/// nonzero value on f, f cannot lie in the slice span. Returns false on
/// success, nullopt when no certificate was found.
std::optional<bool> functional_nonmember_certificate(const Ring& ring, const DiffPoly& f,
                                                     const std::vector<DiffPoly>& gens,
                                                     const SliceLimits& limits,
                                                     const CertificatePolicy& policy = {});

} // namespace ritt
