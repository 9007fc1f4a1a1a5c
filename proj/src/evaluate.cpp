#include "wsel/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace wsel {

double evaluate_subset(const LabeledDataset& train, const LabeledDataset& test,
                       const FeatureSubset& subset) {
  if (train.n_features() != test.n_features()) {
    throw std::invalid_argument("train and test have different feature counts");
  }
  if (train.class_names() != test.class_names()) {
    throw std::invalid_argument("train and test label universes differ");
  }
  validate_subset(subset, train.n_features());
  if (subset.empty()) {
    throw std::invalid_argument("evaluate_subset needs a non-empty feature subset");
  }

  int correct = 0;
  for (int t = 0; t < test.n_samples(); ++t) {
    double best = std::numeric_limits<double>::infinity();
    int best_label = -1;
    for (int r = 0; r < train.n_samples(); ++r) {
      double dist2 = 0.0;
      for (int f : subset.indices) {
        const double diff = test.values()(t, f) - train.values()(r, f);
        dist2 += diff * diff;
      }
      // Strict < over ascending row index keeps the lowest index on ties.
      if (dist2 < best) {
        best = dist2;
        best_label = train.labels()[static_cast<std::size_t>(r)];
      }
    }
    if (best_label == test.labels()[static_cast<std::size_t>(t)]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.n_samples());
}

double rsd(const std::vector<double>& values) {
  if (values.size() < 2) {
    throw std::invalid_argument("rsd needs at least 2 values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (mean == 0.0) {
    throw std::invalid_argument("rsd is undefined for zero mean");
  }
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return sd / mean;
}

std::pair<LabeledDataset, LabeledDataset> train_test_split(
    const LabeledDataset& ds, double test_frac, std::uint64_t seed) {
  if (!(test_frac > 0.0) || !(test_frac < 1.0)) {
    throw std::invalid_argument("test_frac must be in (0, 1)");
  }
  std::mt19937_64 engine(seed);
  std::vector<bool> to_test(static_cast<std::size_t>(ds.n_samples()), false);
  for (int c = 0; c < ds.n_classes(); ++c) {
    std::vector<int> rows = ds.class_rows(c);
    const std::size_t nk = rows.size();
    if (nk < 2) {
      throw std::invalid_argument("class '" +
                                  ds.class_names()[static_cast<std::size_t>(c)] +
                                  "' has fewer than 2 samples; cannot split");
    }
    // Fisher-Yates with the engine's raw output; std::shuffle is
    // implementation-defined and would break cross-platform reproducibility.
    for (std::size_t i = nk - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(engine() % (i + 1));
      std::swap(rows[i], rows[j]);
    }
    std::size_t take = static_cast<std::size_t>(
        std::llround(test_frac * static_cast<double>(nk)));
    take = std::max<std::size_t>(1, std::min(take, nk - 1));
    for (std::size_t i = 0; i < take; ++i) {
      to_test[static_cast<std::size_t>(rows[i])] = true;
    }
  }

  auto build = [&](bool test_side) {
    std::vector<int> rows;
    for (int i = 0; i < ds.n_samples(); ++i) {
      if (to_test[static_cast<std::size_t>(i)] == test_side) rows.push_back(i);
    }
    Matrix values(static_cast<Eigen::Index>(rows.size()), ds.n_features());
    std::vector<int> labels(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      values.row(static_cast<Eigen::Index>(i)) = ds.values().row(rows[i]);
      labels[i] = ds.labels()[static_cast<std::size_t>(rows[i])];
    }
    return LabeledDataset(std::move(values), std::move(labels), ds.class_names(),
                          ds.feature_names());
  };
  return {build(false), build(true)};
}

}  // namespace wsel
