#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mll/features.hpp"
#include "mll/sparse.hpp"

namespace mll {

/// Feature matrix plus binary label matrix with attribute names.
/// features.n_rows() == labels.n_rows(); names are unique and ordered.
struct MultiLabelDataset {
    FeatureMatrix features;        // n x d
    CsrBinaryMatrix labels;        // n x L
    std::vector<std::string> feature_names;
    std::vector<std::string> label_names;

    std::size_t n() const { return features.n_rows(); }
    std::size_t d() const { return features.n_cols(); }
    std::size_t n_labels() const { return labels.n_cols(); }

    bool operator==(const MultiLabelDataset& other) const = default;
};

// Where the label attributes sit inside an ARFF attribute list.
enum class LabelLocation { AtEnd, AtStart };

struct LabelSpec {
    std::size_t count = 0;
    LabelLocation location = LabelLocation::AtEnd;
};

struct DatasetStats {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t n_labels = 0;
    double label_cardinality = 0.0;   // mean labels per row
    double label_density = 0.0;       // cardinality / L
    std::size_t distinct_combinations = 0;
};

DatasetStats dataset_stats(const MultiLabelDataset& ds);

// Seeded k-fold split: indices 0..n-1 are shuffled once, then cut into
// `folds` contiguous test blocks whose sizes differ by at most one. The train
// side is the complement, in shuffled order. Deterministic per (n, folds, seed).
struct FoldSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

std::vector<FoldSplit> kfold_indices(std::size_t n, std::size_t folds,
                                     std::uint64_t seed);

// Synthetic dataset with linear-threshold labels: features ~ U[-1,1); label j
// is set on row i iff w_j . x_i + b_j > 0 with w_j, b_j ~ U[-1,1) drawn from
// the same RNG stream (features first, then per-label weights and bias).
MultiLabelDataset generate_synthetic(std::size_t n, std::size_t d,
                                     std::size_t n_labels, std::uint64_t seed);

}  // namespace mll
