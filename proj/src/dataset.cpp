#include "wsel/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace wsel {

FeatureSubset FeatureSubset::all(int n_features) {
  if (n_features < 0) {
    throw std::invalid_argument("FeatureSubset::all: negative feature count");
  }
  FeatureSubset s;
  s.indices.resize(static_cast<std::size_t>(n_features));
  std::iota(s.indices.begin(), s.indices.end(), 0);
  return s;
}

void validate_subset(const FeatureSubset& subset, int n_features) {
  std::set<int> seen;
  for (int idx : subset.indices) {
    if (idx < 0 || idx >= n_features) {
      throw std::invalid_argument("feature index " + std::to_string(idx) +
                                  " out of range [0, " +
                                  std::to_string(n_features) + ")");
    }
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("duplicate feature index " +
                                  std::to_string(idx) + " in subset");
    }
  }
}

EmpiricalMeasure1D::EmpiricalMeasure1D(std::vector<double> values,
                                       std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
  if (values_.empty()) {
    throw std::invalid_argument("empirical measure needs at least one atom");
  }
  if (values_.size() != weights_.size()) {
    throw std::invalid_argument("measure has " + std::to_string(values_.size()) +
                                " values but " + std::to_string(weights_.size()) +
                                " weights");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("non-finite atom value in measure");
    }
    if (!(weights_[i] > 0.0)) {
      throw std::invalid_argument("measure weights must be strictly positive");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw std::invalid_argument("measure atoms must be sorted ascending");
    }
    total += weights_[i];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("measure weights sum to " + std::to_string(total) +
                                ", expected 1");
  }
}

EmpiricalMeasure1D EmpiricalMeasure1D::from_samples(std::vector<double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("empirical measure needs at least one sample");
  }
  std::sort(samples.begin(), samples.end());
  std::vector<double> weights(samples.size(), 1.0 / static_cast<double>(samples.size()));
  return EmpiricalMeasure1D(std::move(samples), std::move(weights));
}

EmpiricalMeasure1D EmpiricalMeasure1D::from_weighted(std::vector<double> values,
                                                     std::vector<double> weights) {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("values/weights length mismatch");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> v(values.size()), w(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    v[i] = values[order[i]];
    w[i] = weights[order[i]];
  }
  return EmpiricalMeasure1D(std::move(v), std::move(w));
}

bool EmpiricalMeasure1D::is_uniform() const {
  const double expect = 1.0 / static_cast<double>(size());
  for (double w : weights_) {
    if (std::abs(w - expect) > 1e-12) return false;
  }
  return true;
}

LabeledDataset::LabeledDataset(Matrix values, std::vector<int> labels,
                               std::vector<std::string> class_names,
                               std::vector<std::string> feature_names)
    : values_(std::move(values)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)),
      feature_names_(std::move(feature_names)) {
  const auto rows = values_.rows();
  if (rows == 0 || values_.cols() == 0) {
    throw std::invalid_argument("dataset must have at least one sample and one feature");
  }
  if (static_cast<Eigen::Index>(labels_.size()) != rows) {
    throw std::invalid_argument("dataset has " + std::to_string(rows) + " rows but " +
                                std::to_string(labels_.size()) + " labels");
  }
  const int k = static_cast<int>(class_names_.size());
  if (k < 2) {
    throw std::invalid_argument("dataset must contain at least 2 classes, got " +
                                std::to_string(k));
  }
  if (!feature_names_.empty() &&
      static_cast<Eigen::Index>(feature_names_.size()) != values_.cols()) {
    throw std::invalid_argument("feature name count does not match feature count");
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw std::invalid_argument("non-finite value at row " + std::to_string(i) +
                                    ", column " + std::to_string(j));
      }
    }
  }
  class_members_.assign(static_cast<std::size_t>(k), {});
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const int label = labels_[i];
    if (label < 0 || label >= k) {
      throw std::invalid_argument("label index " + std::to_string(label) +
                                  " out of range [0, " + std::to_string(k) + ")");
    }
    class_members_[static_cast<std::size_t>(label)].push_back(static_cast<int>(i));
  }
  for (int c = 0; c < k; ++c) {
    if (class_members_[static_cast<std::size_t>(c)].empty()) {
      throw std::invalid_argument("class '" + class_names_[static_cast<std::size_t>(c)] +
                                  "' has no samples");
    }
  }
}

namespace {

bool parse_full_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

LabeledDataset LabeledDataset::from_raw_labels(Matrix values,
                                               const std::vector<std::string>& raw_labels,
                                               std::vector<std::string> feature_names) {
  std::set<std::string> distinct(raw_labels.begin(), raw_labels.end());
  std::vector<std::string> names(distinct.begin(), distinct.end());

  // Numeric-looking label sets get numeric order so "10" sorts after "2".
  bool all_numeric = !names.empty();
  std::vector<double> parsed(names.size());
  for (std::size_t i = 0; i < names.size() && all_numeric; ++i) {
    all_numeric = parse_full_double(names[i], parsed[i]);
  }
  if (all_numeric) {
    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (parsed[a] != parsed[b]) return parsed[a] < parsed[b];
      return names[a] < names[b];
    });
    std::vector<std::string> sorted(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = names[order[i]];
    names = std::move(sorted);
  }
  // else: std::set already yields lexicographic order.

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[names[i]] = static_cast<int>(i);
  }
  std::vector<int> labels(raw_labels.size());
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    labels[i] = index.at(raw_labels[i]);
  }
  return LabeledDataset(std::move(values), std::move(labels), std::move(names),
                        std::move(feature_names));
}

const std::vector<int>& LabeledDataset::class_rows(int class_idx) const {
  if (class_idx < 0 || class_idx >= n_classes()) {
    throw std::invalid_argument("class index " + std::to_string(class_idx) +
                                " out of range [0, " + std::to_string(n_classes()) + ")");
  }
  return class_members_[static_cast<std::size_t>(class_idx)];
}

Matrix class_slice(const LabeledDataset& ds, int class_idx,
                   const FeatureSubset& subset) {
  validate_subset(subset, ds.n_features());
  if (subset.empty()) {
    throw std::invalid_argument("class_slice needs a non-empty feature subset");
  }
  const auto& rows = ds.class_rows(class_idx);
  Matrix out(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(subset.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          ds.values()(rows[i], subset.indices[j]);
    }
  }
  return out;
}

EmpiricalMeasure1D feature_measure(const LabeledDataset& ds, int class_idx,
                                   int feature_idx) {
  if (feature_idx < 0 || feature_idx >= ds.n_features()) {
    throw std::invalid_argument("feature index " + std::to_string(feature_idx) +
                                " out of range [0, " + std::to_string(ds.n_features()) +
                                ")");
  }
  const auto& rows = ds.class_rows(class_idx);
  std::vector<double> samples(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    samples[i] = ds.values()(rows[i], feature_idx);
  }
  return EmpiricalMeasure1D::from_samples(std::move(samples));
}

FeatureStats compute_feature_stats(const LabeledDataset& ds) {
  const Eigen::Index n = ds.values().rows();
  const Eigen::Index d = ds.values().cols();
  FeatureStats stats;
  stats.mean.resize(d);
  stats.sigma.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mean = ds.values().col(j).mean();
    const double var =
        (ds.values().col(j).array() - mean).square().sum() / static_cast<double>(n);
    const double sigma = std::sqrt(var);
    if (sigma <= 1e-12 * std::max(1.0, std::abs(mean))) {
      // Constant column: anchor the mean at the first value so the output is
      // exactly zero, and leave the scale alone.
      stats.mean(j) = ds.values()(0, j);
      stats.sigma(j) = 1.0;
    } else {
      stats.mean(j) = mean;
      stats.sigma(j) = sigma;
    }
  }
  return stats;
}

LabeledDataset apply_standardization(const LabeledDataset& ds,
                                     const FeatureStats& stats) {
  if (stats.mean.size() != ds.values().cols() ||
      stats.sigma.size() != ds.values().cols()) {
    throw std::invalid_argument("feature stats do not match dataset width");
  }
  Matrix z = ds.values();
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    z.col(j) = (z.col(j).array() - stats.mean(j)) / stats.sigma(j);
  }
  return LabeledDataset(std::move(z), ds.labels(), ds.class_names(),
                        ds.feature_names());
}

LabeledDataset standardize(const LabeledDataset& ds) {
  return apply_standardization(ds, compute_feature_stats(ds));
}

}  // namespace wsel
