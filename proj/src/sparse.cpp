#include "mll/sparse.hpp"

#include <algorithm>
#include <string>

#include "mll/errors.hpp"

namespace mll {

namespace {

std::string shape_str(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

CsrBinaryMatrix::CsrBinaryMatrix(std::size_t n_rows, std::size_t n_cols,
                                 std::vector<std::size_t> row_offsets,
                                 std::vector<ColIndex> col_indices)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)) {
    if (row_offsets_.size() != n_rows_ + 1)
        throw ArgumentError("row_offsets must have length n_rows+1");
    if (row_offsets_.front() != 0 || row_offsets_.back() != col_indices_.size())
        throw ArgumentError("row_offsets must start at 0 and end at nnz");
    for (std::size_t i = 0; i < n_rows_; ++i) {
        if (row_offsets_[i] > row_offsets_[i + 1])
            throw ArgumentError("row_offsets must be non-decreasing");
        for (std::size_t p = row_offsets_[i]; p + 1 < row_offsets_[i + 1]; ++p) {
            if (col_indices_[p] >= col_indices_[p + 1])
                throw ArgumentError("row " + std::to_string(i) +
                                    " column indices must be strictly increasing");
        }
    }
    for (ColIndex c : col_indices_) {
        if (c >= n_cols_)
            throw ArgumentError("column index " + std::to_string(c) +
                                " out of range for " + shape_str(n_rows_, n_cols_) +
                                " matrix");
    }
}

std::span<const ColIndex> CsrBinaryMatrix::row(std::size_t i) const {
    if (i >= n_rows_)
        throw BoundsError("row index " + std::to_string(i) + " out of range for " +
                          shape_str(n_rows_, n_cols_) + " matrix");
    return {col_indices_.data() + row_offsets_[i],
            row_offsets_[i + 1] - row_offsets_[i]};
}

std::size_t CsrBinaryMatrix::row_size(std::size_t i) const {
    if (i >= n_rows_)
        throw BoundsError("row index " + std::to_string(i) + " out of range for " +
                          shape_str(n_rows_, n_cols_) + " matrix");
    return row_offsets_[i + 1] - row_offsets_[i];
}

bool CsrBinaryMatrix::contains(std::size_t i, std::size_t j) const {
    auto r = row(i);
    return std::binary_search(r.begin(), r.end(), static_cast<ColIndex>(j));
}

CsrBinaryMatrix csr_from_coords(std::vector<Coord> coords, std::size_t n_rows,
                                std::size_t n_cols) {
    for (const auto& [r, c] : coords) {
        if (r >= n_rows || c >= n_cols)
            throw BoundsError("coordinate (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") out of bounds for " +
                              shape_str(n_rows, n_cols) + " matrix");
    }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

    std::vector<std::size_t> offsets(n_rows + 1, 0);
    std::vector<ColIndex> cols;
    cols.reserve(coords.size());
    for (const auto& [r, c] : coords) {
        ++offsets[r + 1];
        cols.push_back(static_cast<ColIndex>(c));
    }
    for (std::size_t i = 0; i < n_rows; ++i) offsets[i + 1] += offsets[i];
    return CsrBinaryMatrix(CsrBinaryMatrix::Unchecked{}, n_rows, n_cols,
                           std::move(offsets), std::move(cols));
}

std::vector<Coord> csr_to_coords(const CsrBinaryMatrix& m) {
    std::vector<Coord> out;
    out.reserve(m.nnz());
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (ColIndex c : m.row(i)) out.emplace_back(i, c);
    return out;
}

CsrBinaryMatrix select_columns(const CsrBinaryMatrix& m,
                               const std::vector<std::size_t>& cols) {
    constexpr ColIndex kAbsent = static_cast<ColIndex>(-1);
    std::vector<ColIndex> new_index(m.n_cols(), kAbsent);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.n_cols())
            throw ArgumentError("selected column " + std::to_string(cols[j]) +
                                " out of range");
        if (new_index[cols[j]] != kAbsent)
            throw ArgumentError("duplicate selected column " +
                                std::to_string(cols[j]));
        new_index[cols[j]] = static_cast<ColIndex>(j);
    }

    std::vector<std::size_t> offsets(m.n_rows() + 1, 0);
    std::vector<ColIndex> out_cols;
    std::vector<ColIndex> row_buf;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        row_buf.clear();
        for (ColIndex c : m.row(i)) {
            if (new_index[c] != kAbsent) row_buf.push_back(new_index[c]);
        }
        std::sort(row_buf.begin(), row_buf.end());
        out_cols.insert(out_cols.end(), row_buf.begin(), row_buf.end());
        offsets[i + 1] = out_cols.size();
    }
    return CsrBinaryMatrix(CsrBinaryMatrix::Unchecked{}, m.n_rows(), cols.size(),
                           std::move(offsets), std::move(out_cols));
}

CsrBinaryMatrix select_rows(const CsrBinaryMatrix& m,
                            const std::vector<std::size_t>& rows) {
    std::vector<std::size_t> offsets(rows.size() + 1, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= m.n_rows())
            throw BoundsError("row index " + std::to_string(rows[i]) +
                              " out of range");
        total += m.row_size(rows[i]);
        offsets[i + 1] = total;
    }
    std::vector<ColIndex> out_cols;
    out_cols.reserve(total);
    for (std::size_t r : rows) {
        auto src = m.row(r);
        out_cols.insert(out_cols.end(), src.begin(), src.end());
    }
    return CsrBinaryMatrix(CsrBinaryMatrix::Unchecked{}, rows.size(), m.n_cols(),
                           std::move(offsets), std::move(out_cols));
}

double density(const CsrBinaryMatrix& m) {
    if (m.n_rows() == 0 || m.n_cols() == 0)
        throw DegenerateInputError("density undefined for zero-sized matrix");
    return static_cast<double>(m.nnz()) /
           (static_cast<double>(m.n_rows()) * static_cast<double>(m.n_cols()));
}

std::span<const ColIndex> row_support(const CsrBinaryMatrix& m, std::size_t i) {
    return m.row(i);
}

}  // namespace mll
