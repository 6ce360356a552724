#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ritt/margin_count.hpp"

namespace ritt {

/// Non-membership certificates for (T_i U_j)^q mod [T_0 U_0] built from 0-1
/// matrix margin counts.
///
/// The functional phi on the slice of multidegree (n, n), weight n^2
/// (n = i + j) maps a monomial with T-jets a_1..a_n and U-jets b_1..b_n to
/// prod a! prod b! (-1)^{sum b} #{0-1 matrices with column sums n - a_l and
/// row sums b_k}. A sweep over every ideal row of that slice verifies, in
/// exact arithmetic, that phi kills the whole ideal slice. Multiplying by
/// (T_i U_j)^(n-q) carries the power-q ideal slice into the power-n one, so
/// phi((T_i U_j)^n) != 0 rules out (T_i U_j)^q for every q <= n. Nothing is
/// assumed from theory; the sweep is the proof.
class PairMarginFunctional {
public:
    /// Definitive false ("not a member") or nullopt (inconclusive).
    std::optional<bool> try_nonmember(std::uint32_t i, std::uint32_t j, std::uint32_t q);

    /// phi on a slice monomial given its T-jets and U-jets (each of size n);
    /// zero when some jet exceeds n.
    Int functional_value(std::uint32_t n, const std::vector<std::uint32_t>& t_jets,
                         const std::vector<std::uint32_t>& u_jets);

    /// Exhaustively checks that phi vanishes on every ideal row of the
    /// (n, n, n^2) slice. Cached per n.
    bool functional_kills_ideal(std::uint32_t n);

private:
    MarginCounter mc_;
    std::map<std::uint32_t, bool> sweep_ok_;
};

} // namespace ritt
