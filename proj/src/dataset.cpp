#include "mll/dataset.hpp"

#include <set>
#include <string>

#include "mll/errors.hpp"
#include "mll/rng.hpp"

namespace mll {

DatasetStats dataset_stats(const MultiLabelDataset& ds) {
    DatasetStats st;
    st.n = ds.n();
    st.d = ds.d();
    st.n_labels = ds.n_labels();
    if (st.n > 0) {
        st.label_cardinality =
            static_cast<double>(ds.labels.nnz()) / static_cast<double>(st.n);
    }
    if (st.n_labels > 0)
        st.label_density = st.label_cardinality / static_cast<double>(st.n_labels);
    std::set<std::vector<ColIndex>> combos;
    for (std::size_t i = 0; i < st.n; ++i) {
        auto r = ds.labels.row(i);
        combos.emplace(r.begin(), r.end());
    }
    st.distinct_combinations = combos.size();
    return st;
}

std::vector<FoldSplit> kfold_indices(std::size_t n, std::size_t folds,
                                     std::uint64_t seed) {
    if (folds < 2) throw ArgumentError("folds must be at least 2");
    if (folds > n)
        throw ArgumentError("folds (" + std::to_string(folds) +
                            ") cannot exceed n (" + std::to_string(n) + ")");
    Rng rng(seed);
    std::vector<std::size_t> perm = rng.permutation(n);

    std::vector<FoldSplit> out(folds);
    const std::size_t base = n / folds;
    const std::size_t extra = n % folds;  // first `extra` folds get one more
    std::size_t start = 0;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        out[f].test.assign(perm.begin() + start, perm.begin() + start + size);
        out[f].train.reserve(n - size);
        out[f].train.insert(out[f].train.end(), perm.begin(), perm.begin() + start);
        out[f].train.insert(out[f].train.end(), perm.begin() + start + size,
                            perm.end());
        start += size;
    }
    return out;
}

MultiLabelDataset generate_synthetic(std::size_t n, std::size_t d,
                                     std::size_t n_labels, std::uint64_t seed) {
    if (n < 1 || d < 1 || n_labels < 1)
        throw ArgumentError("synthetic dataset needs n, d, L >= 1");
    Rng rng(seed);
    std::vector<double> values(n * d);
    for (double& v : values) v = rng.real_pm1();
    FeatureMatrix features = FeatureMatrix::from_dense(n, d, std::move(values));

    std::vector<Coord> coords;
    std::vector<double> w(d);
    for (std::size_t j = 0; j < n_labels; ++j) {
        for (std::size_t c = 0; c < d; ++c) w[c] = rng.real_pm1();
        const double bias = rng.real_pm1();
        for (std::size_t i = 0; i < n; ++i) {
            if (features.row_dot(i, w) + bias > 0.0) coords.emplace_back(i, j);
        }
    }

    MultiLabelDataset ds;
    ds.features = std::move(features);
    ds.labels = csr_from_coords(std::move(coords), n, n_labels);
    ds.feature_names.reserve(d);
    for (std::size_t c = 0; c < d; ++c)
        ds.feature_names.push_back("x" + std::to_string(c));
    ds.label_names.reserve(n_labels);
    for (std::size_t j = 0; j < n_labels; ++j)
        ds.label_names.push_back("label" + std::to_string(j));
    return ds;
}

}  // namespace mll
