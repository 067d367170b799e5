#include "mll/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mll/errors.hpp"

namespace mll {

namespace {

void check_finite(const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) throw DataError("non-finite feature value");
    }
}

}  // namespace

FeatureMatrix FeatureMatrix::from_dense(std::size_t n_rows, std::size_t n_cols,
                                        std::vector<double> values) {
    if (values.size() != n_rows * n_cols)
        throw ArgumentError("dense feature matrix needs n_rows*n_cols values");
    check_finite(values);
    FeatureMatrix m;
    m.dense_ = true;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.values_ = std::move(values);
    m.row_offsets_.clear();
    return m;
}

FeatureMatrix FeatureMatrix::from_csr(std::size_t n_rows, std::size_t n_cols,
                                      std::vector<std::size_t> row_offsets,
                                      std::vector<ColIndex> col_indices,
                                      std::vector<double> values) {
    if (values.size() != col_indices.size())
        throw ArgumentError("CSR feature matrix needs one value per stored entry");
    // Reuse the binary CSR structural validation.
    CsrBinaryMatrix structure(n_rows, n_cols, row_offsets, col_indices);
    check_finite(values);
    FeatureMatrix m;
    m.dense_ = false;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.row_offsets_ = std::move(row_offsets);
    m.col_indices_ = std::move(col_indices);
    m.values_ = std::move(values);
    return m;
}

void FeatureMatrix::check_row(std::size_t i) const {
    if (i >= n_rows_)
        throw BoundsError("row index " + std::to_string(i) + " out of range");
}

double FeatureMatrix::at(std::size_t i, std::size_t j) const {
    check_row(i);
    if (j >= n_cols_)
        throw BoundsError("column index " + std::to_string(j) + " out of range");
    if (dense_) return values_[i * n_cols_ + j];
    auto begin = col_indices_.begin() + row_offsets_[i];
    auto end = col_indices_.begin() + row_offsets_[i + 1];
    auto it = std::lower_bound(begin, end, static_cast<ColIndex>(j));
    if (it == end || *it != static_cast<ColIndex>(j)) return 0.0;
    return values_[row_offsets_[i] + static_cast<std::size_t>(it - begin)];
}

double FeatureMatrix::row_dot(std::size_t i, std::span<const double> w) const {
    check_row(i);
    if (w.size() != n_cols_) throw ArgumentError("weight length mismatch");
    double sum = 0.0;
    if (dense_) {
        const double* row = values_.data() + i * n_cols_;
        for (std::size_t j = 0; j < n_cols_; ++j) sum += row[j] * w[j];
    } else {
        for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
            sum += values_[p] * w[col_indices_[p]];
    }
    return sum;
}

void FeatureMatrix::add_row_scaled(std::size_t i, double coeff,
                                   std::span<double> acc) const {
    check_row(i);
    if (acc.size() != n_cols_) throw ArgumentError("accumulator length mismatch");
    if (dense_) {
        const double* row = values_.data() + i * n_cols_;
        for (std::size_t j = 0; j < n_cols_; ++j) acc[j] += coeff * row[j];
    } else {
        for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
            acc[col_indices_[p]] += coeff * values_[p];
    }
}

void FeatureMatrix::copy_row_dense(std::size_t i, std::span<double> out) const {
    check_row(i);
    if (out.size() != n_cols_) throw ArgumentError("output length mismatch");
    if (dense_) {
        const double* row = values_.data() + i * n_cols_;
        std::copy(row, row + n_cols_, out.begin());
    } else {
        std::fill(out.begin(), out.end(), 0.0);
        for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
            out[col_indices_[p]] = values_[p];
    }
}

FeatureMatrix FeatureMatrix::select_rows(
    const std::vector<std::size_t>& rows) const {
    for (std::size_t r : rows) {
        if (r >= n_rows_)
            throw BoundsError("row index " + std::to_string(r) + " out of range");
    }
    FeatureMatrix m;
    m.dense_ = dense_;
    m.n_rows_ = rows.size();
    m.n_cols_ = n_cols_;
    if (dense_) {
        m.values_.reserve(rows.size() * n_cols_);
        for (std::size_t r : rows) {
            const double* row = values_.data() + r * n_cols_;
            m.values_.insert(m.values_.end(), row, row + n_cols_);
        }
        m.row_offsets_.clear();
    } else {
        m.row_offsets_.assign(rows.size() + 1, 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            m.row_offsets_[i + 1] =
                m.row_offsets_[i] + (row_offsets_[rows[i] + 1] - row_offsets_[rows[i]]);
        m.col_indices_.reserve(m.row_offsets_.back());
        m.values_.reserve(m.row_offsets_.back());
        for (std::size_t r : rows) {
            for (std::size_t p = row_offsets_[r]; p < row_offsets_[r + 1]; ++p) {
                m.col_indices_.push_back(col_indices_[p]);
                m.values_.push_back(values_[p]);
            }
        }
    }
    return m;
}

FeatureMatrix FeatureMatrix::with_appended_binary_columns(
    const CsrBinaryMatrix& bits) const {
    if (bits.n_rows() != n_rows_)
        throw ArgumentError("appended columns must have matching row count");
    const std::size_t extra = bits.n_cols();
    FeatureMatrix m;
    m.dense_ = dense_;
    m.n_rows_ = n_rows_;
    m.n_cols_ = n_cols_ + extra;
    if (dense_) {
        m.values_.assign(n_rows_ * m.n_cols_, 0.0);
        for (std::size_t i = 0; i < n_rows_; ++i) {
            const double* src = values_.data() + i * n_cols_;
            double* dst = m.values_.data() + i * m.n_cols_;
            std::copy(src, src + n_cols_, dst);
            for (ColIndex c : bits.row(i)) dst[n_cols_ + c] = 1.0;
        }
        m.row_offsets_.clear();
    } else {
        m.row_offsets_.assign(n_rows_ + 1, 0);
        for (std::size_t i = 0; i < n_rows_; ++i)
            m.row_offsets_[i + 1] = m.row_offsets_[i] +
                                    (row_offsets_[i + 1] - row_offsets_[i]) +
                                    bits.row_size(i);
        m.col_indices_.reserve(m.row_offsets_.back());
        m.values_.reserve(m.row_offsets_.back());
        for (std::size_t i = 0; i < n_rows_; ++i) {
            for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
                m.col_indices_.push_back(col_indices_[p]);
                m.values_.push_back(values_[p]);
            }
            for (ColIndex c : bits.row(i)) {
                m.col_indices_.push_back(static_cast<ColIndex>(n_cols_ + c));
                m.values_.push_back(1.0);
            }
        }
    }
    return m;
}

bool FeatureMatrix::operator==(const FeatureMatrix& other) const {
    if (n_rows_ != other.n_rows_ || n_cols_ != other.n_cols_) return false;
    for (std::size_t i = 0; i < n_rows_; ++i)
        for (std::size_t j = 0; j < n_cols_; ++j)
            if (at(i, j) != other.at(i, j)) return false;
    return true;
}

std::span<const double> FeatureMatrix::dense_row(std::size_t i) const {
    check_row(i);
    if (!dense_) throw ArgumentError("dense_row called on CSR matrix");
    return {values_.data() + i * n_cols_, n_cols_};
}

std::span<const ColIndex> FeatureMatrix::sparse_row_cols(std::size_t i) const {
    check_row(i);
    if (dense_) throw ArgumentError("sparse_row_cols called on dense matrix");
    return {col_indices_.data() + row_offsets_[i],
            row_offsets_[i + 1] - row_offsets_[i]};
}

std::span<const double> FeatureMatrix::sparse_row_vals(std::size_t i) const {
    check_row(i);
    if (dense_) throw ArgumentError("sparse_row_vals called on dense matrix");
    return {values_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
}

namespace {

double sq(double x) { return x * x; }

}  // namespace

// Terms accumulate in ascending column order. Columns where both rows are zero
// contribute an exact 0.0, so dense and sparse layouts give bit-equal sums.
double squared_distance(const FeatureMatrix& a, std::size_t i,
                        const FeatureMatrix& b, std::size_t j) {
    if (a.n_cols() != b.n_cols())
        throw ArgumentError("feature dimension mismatch in distance");
    double sum = 0.0;
    if (a.is_dense() && b.is_dense()) {
        auto ra = a.dense_row(i);
        auto rb = b.dense_row(j);
        for (std::size_t c = 0; c < ra.size(); ++c) sum += sq(ra[c] - rb[c]);
    } else if (!a.is_dense() && !b.is_dense()) {
        auto ca = a.sparse_row_cols(i);
        auto va = a.sparse_row_vals(i);
        auto cb = b.sparse_row_cols(j);
        auto vb = b.sparse_row_vals(j);
        std::size_t pa = 0, pb = 0;
        while (pa < ca.size() && pb < cb.size()) {
            if (ca[pa] < cb[pb]) {
                sum += sq(va[pa] - 0.0);
                ++pa;
            } else if (cb[pb] < ca[pa]) {
                sum += sq(0.0 - vb[pb]);
                ++pb;
            } else {
                sum += sq(va[pa] - vb[pb]);
                ++pa;
                ++pb;
            }
        }
        for (; pa < ca.size(); ++pa) sum += sq(va[pa]);
        for (; pb < cb.size(); ++pb) sum += sq(vb[pb]);
    } else {
        const FeatureMatrix& dm = a.is_dense() ? a : b;
        const FeatureMatrix& sm = a.is_dense() ? b : a;
        const std::size_t di = a.is_dense() ? i : j;
        const std::size_t si = a.is_dense() ? j : i;
        auto rd = dm.dense_row(di);
        auto cs = sm.sparse_row_cols(si);
        auto vs = sm.sparse_row_vals(si);
        std::size_t ps = 0;
        for (std::size_t c = 0; c < rd.size(); ++c) {
            double sv = 0.0;
            if (ps < cs.size() && cs[ps] == c) {
                sv = vs[ps];
                ++ps;
            }
            sum += sq(rd[c] - sv);
        }
    }
    return sum;
}

}  // namespace mll
