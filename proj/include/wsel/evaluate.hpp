#pragma once

#include "wsel/dataset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wsel {

// 1-nearest-neighbor accuracy of `test` against `train`, using Euclidean
// distance on the given feature subset. Distance ties keep the lowest
// training-row index. Both datasets must share width and class names.
double evaluate_subset(const LabeledDataset& train, const LabeledDataset& test,
                       const FeatureSubset& subset);

// Relative standard deviation: sample (n-1) standard deviation divided by the
// mean. Needs n >= 2 and a non-zero mean.
double rsd(const std::vector<double>& values);

// Deterministic stratified split: within each class the rows are shuffled by
// a mt19937_64 Fisher-Yates keyed on `seed`, and round(test_frac * n_k) of
// them (clamped so both sides keep at least one) go to the test side. Row
// order within each side follows the original dataset.
std::pair<LabeledDataset, LabeledDataset> train_test_split(
    const LabeledDataset& ds, double test_frac, std::uint64_t seed);

}  // namespace wsel
