#pragma once

#include <cstdint>
#include <vector>

#include "ritt/rational.hpp"

namespace ritt {

/// Sparse integer row over a fixed column set; cols sorted ascending,
/// parallel values, no zeros, content 1, positive leading value.
struct SparseRow {
    std::vector<std::uint32_t> cols;
    std::vector<Int> vals;

    bool empty() const { return cols.empty(); }
    std::size_t nnz() const { return cols.size(); }
    std::uint32_t lead() const { return cols.front(); }

    /// Divide by the gcd of all values and make the leading value positive.
    void normalize();
};

/// Incremental row echelon form over the integers.
///
/// Elimination is fraction-free: rows are combined by cross-multiplication
/// with the pivot row and re-normalized, so every stored value stays an
/// exact integer. Pivoting is leftmost-nonzero: a row's pivot column is its
/// leading column after reduction against all previously stored pivots.
/// With a fixed insertion order the whole computation is deterministic.
class Echelon {
public:
    explicit Echelon(std::uint32_t ncols) : pivot_of_col_(ncols, -1) {}

    /// Reduce r against the current pivots; store it if nonzero.
    /// Returns true when r contributed a new pivot.
    bool insert(SparseRow r);

    /// True iff r lies in the row span accumulated so far.
    bool reduces_to_zero(SparseRow r);

    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(SparseRow& r);

    std::vector<std::int32_t> pivot_of_col_;
    std::vector<SparseRow> rows_;
    SparseRow scratch_;
};

/// Deterministic input ordering for the elimination: leading column, then
/// sparsity, then the full support, then values.
void sort_rows_for_elimination(std::vector<SparseRow>& rows);

} // namespace ritt
