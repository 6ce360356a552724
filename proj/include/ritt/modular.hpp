#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ritt/exact_rank.hpp"

namespace ritt {

/// Row echelon form over F_p, p = 2^61 - 1, used only to *discover*
/// candidate certificates (null vectors, solution supports). Nothing
/// downstream trusts a mod-p result: every candidate is verified with
/// exact arithmetic before it decides anything.
class ModEchelon {
public:
    static constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

    struct Row {
        std::vector<std::uint32_t> cols;
        std::vector<std::uint64_t> vals;
        bool empty() const { return cols.empty(); }
        std::uint32_t lead() const { return cols.front(); }
    };

    explicit ModEchelon(std::uint32_t ncols, std::uint64_t modulus = P)
        : modulus_(modulus), pivot_of_col_(ncols, -1) {}

    std::uint64_t modulus() const { return modulus_; }

    Row from_sparse(const SparseRow& r) const;

    /// Reduce and store; true when the row contributed a new pivot.
    bool insert(Row r);

    std::size_t rank() const { return rows_.size(); }
    std::uint32_t ncols() const { return static_cast<std::uint32_t>(pivot_of_col_.size()); }
    bool is_pivot(std::uint32_t col) const { return pivot_of_col_[col] >= 0; }
    std::vector<std::uint32_t> pivot_cols() const;

    /// Null vector of the current row span with a 1 at the given non-pivot
    /// column and support elsewhere only on pivot columns (dense form).
    std::vector<std::uint64_t> null_vector(std::uint32_t free_col) const;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;

private:
    void reduce(Row& r);

    std::uint64_t modulus_;
    std::vector<std::int32_t> pivot_of_col_;
    std::vector<Row> rows_;
    std::vector<std::uint64_t> lead_inv_; // cached inverse of each pivot's lead
    Row scratch_;
};

/// Deterministic sequence of 61+ bit moduli for discovery and CRT: the
/// Mersenne prime first, then successive primes above 2^61.
std::vector<std::uint64_t> discovery_primes(std::size_t count);

/// Rational reconstruction of residue mod m: the unique num/den with
/// |num|, den <= sqrt(m/2) when it exists.
std::optional<Rat> reconstruct_rational(const Int& residue, const Int& modulus);

} // namespace ritt
