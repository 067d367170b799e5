#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mll/sparse.hpp"

namespace mll {

/// Real-valued feature matrix with two interchangeable storage layouts:
/// dense row-major, or CSR with explicit values. All operations give
/// identical results  (bit-exact, accumulation always runs in ascending
/// column order) regardless of layout. Immutable after construction.
class FeatureMatrix {
public:
    FeatureMatrix() : dense_(true), n_rows_(0), n_cols_(0), row_offsets_{0} {}

    // Dense, row-major. values.size() must equal n_rows*n_cols; all finite.
    static FeatureMatrix from_dense(std::size_t n_rows, std::size_t n_cols,
                                    std::vector<double> values);

    // CSR with explicit values; same structural invariants as CsrBinaryMatrix.
    static FeatureMatrix from_csr(std::size_t n_rows, std::size_t n_cols,
                                  std::vector<std::size_t> row_offsets,
                                  std::vector<ColIndex> col_indices,
                                  std::vector<double> values);

    bool is_dense() const { return dense_; }
    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }

    double at(std::size_t i, std::size_t j) const;

    // w must have length n_cols; returns sum_j x[i][j] * w[j], accumulated in
    // ascending column order (sparse layout skips zero terms, which does not
    // change the sum).
    double row_dot(std::size_t i, std::span<const double> w) const;

    // acc[j] += coeff * x[i][j] for the stored entries of row i.
    void add_row_scaled(std::size_t i, double coeff, std::span<double> acc) const;

    // Writes row i into out (length n_cols), zero-filling gaps.
    void copy_row_dense(std::size_t i, std::span<double> out) const;

    // Raw row access for the active layout.
    std::span<const double> dense_row(std::size_t i) const;        // dense only
    std::span<const ColIndex> sparse_row_cols(std::size_t i) const;  // csr only
    std::span<const double> sparse_row_vals(std::size_t i) const;    // csr only

    FeatureMatrix select_rows(const std::vector<std::size_t>& rows) const;

    // Appends bits.n_cols() columns holding 0/1 values taken from `bits`.
    // Result keeps this matrix's storage layout.
    FeatureMatrix with_appended_binary_columns(const CsrBinaryMatrix& bits) const;

    // Content equality across layouts.
    bool operator==(const FeatureMatrix& other) const;

private:
    bool dense_;
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<double> values_;           // dense: n_rows*n_cols; csr: nnz
    std::vector<std::size_t> row_offsets_;  // csr only
    std::vector<ColIndex> col_indices_;     // csr only

    void check_row(std::size_t i) const;
};

// Squared Euclidean distance between row i of a and row j of b. Terms are
// accumulated in ascending column order so dense and sparse layouts agree
// bit-exactly. Throws ArgumentError if column counts differ.
double squared_distance(const FeatureMatrix& a, std::size_t i,
                        const FeatureMatrix& b, std::size_t j);

}  // namespace mll
