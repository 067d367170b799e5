#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mll {

using ColIndex = std::uint32_t;
using Coord = std::pair<std::size_t, std::size_t>;  // (row, col)

/// Compressed sparse row binary matrix: presence of a (row, col) entry means 1,
/// absence means 0. No explicit value array is stored. Within each row the
/// column indices are sorted and unique. Immutable after construction.
class CsrBinaryMatrix {
public:
    CsrBinaryMatrix() : n_rows_(0), n_cols_(0), row_offsets_{0} {}

    // Validates all structural invariants; throws ArgumentError on violation.
    CsrBinaryMatrix(std::size_t n_rows, std::size_t n_cols,
                    std::vector<std::size_t> row_offsets,
                    std::vector<ColIndex> col_indices);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }
    std::size_t nnz() const { return col_indices_.size(); }

    const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
    const std::vector<ColIndex>& col_indices() const { return col_indices_; }

    // Sorted column indices of row i. Throws BoundsError.
    std::span<const ColIndex> row(std::size_t i) const;

    std::size_t row_size(std::size_t i) const;

    // Membership test via binary search within the row.
    bool contains(std::size_t i, std::size_t j) const;

    bool operator==(const CsrBinaryMatrix& other) const = default;

private:
    struct Unchecked {};
    CsrBinaryMatrix(Unchecked, std::size_t n_rows, std::size_t n_cols,
                    std::vector<std::size_t> row_offsets,
                    std::vector<ColIndex> col_indices)
        : n_rows_(n_rows),
          n_cols_(n_cols),
          row_offsets_(std::move(row_offsets)),
          col_indices_(std::move(col_indices)) {}

    friend CsrBinaryMatrix csr_from_coords(std::vector<Coord> coords,
                                           std::size_t n_rows, std::size_t n_cols);
    friend CsrBinaryMatrix select_columns(const CsrBinaryMatrix& m,
                                          const std::vector<std::size_t>& cols);
    friend CsrBinaryMatrix select_rows(const CsrBinaryMatrix& m,
                                       const std::vector<std::size_t>& rows);

    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<std::size_t> row_offsets_;
    std::vector<ColIndex> col_indices_;
};

// Builds a matrix from (row, col) coordinates. Duplicates collapse to a single
// entry. Throws BoundsError naming the first out-of-bounds pair.
CsrBinaryMatrix csr_from_coords(std::vector<Coord> coords, std::size_t n_rows,
                                std::size_t n_cols);

// All stored entries as sorted (row, col) pairs.
std::vector<Coord> csr_to_coords(const CsrBinaryMatrix& m);

// Column selection: result[i][j] = m[i][cols[j]]. `cols` must be distinct and
// in range (ArgumentError otherwise). Works entry-wise on the sparse storage.
CsrBinaryMatrix select_columns(const CsrBinaryMatrix& m,
                               const std::vector<std::size_t>& cols);

// Row selection; duplicate row indices are allowed. Throws BoundsError.
CsrBinaryMatrix select_rows(const CsrBinaryMatrix& m,
                            const std::vector<std::size_t>& rows);

// nnz / (n_rows * n_cols). Throws DegenerateInputError on a zero-sized matrix.
double density(const CsrBinaryMatrix& m);

// Sorted column indices of row i. Throws BoundsError.
std::span<const ColIndex> row_support(const CsrBinaryMatrix& m, std::size_t i);

}  // namespace mll
