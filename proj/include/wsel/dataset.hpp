#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace wsel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Ordered list of distinct feature indices. Slices taken with a subset keep
// the column order given here.
struct FeatureSubset {
  std::vector<int> indices;

  static FeatureSubset single(int index) { return FeatureSubset{{index}}; }
  static FeatureSubset all(int n_features);

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
};

// Throws std::invalid_argument on duplicates or indices outside [0, n_features).
void validate_subset(const FeatureSubset& subset, int n_features);

// One-dimensional weighted empirical measure: atoms sorted ascending, weights
// strictly positive and summing to 1 (within 1e-12).
class EmpiricalMeasure1D {
public:
  // Atoms must already be sorted; throws std::invalid_argument otherwise.
  EmpiricalMeasure1D(std::vector<double> values, std::vector<double> weights);

  // Uniform measure over the samples (sorted internally, duplicates kept as
  // separate atoms of weight 1/n).
  static EmpiricalMeasure1D from_samples(std::vector<double> samples);

  // Weighted measure from atoms in arbitrary order; sorted internally.
  static EmpiricalMeasure1D from_weighted(std::vector<double> values,
                                          std::vector<double> weights);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return values_.size(); }

  // True when every weight equals 1/size within 1e-12.
  bool is_uniform() const;

private:
  std::vector<double> values_;
  std::vector<double> weights_;
};

// Immutable labeled sample matrix. Rows are samples, columns are features.
// Labels are contiguous class indices 0..K-1 with K >= 2, every class
// non-empty, and every value finite.
class LabeledDataset {
public:
  LabeledDataset(Matrix values, std::vector<int> labels,
                 std::vector<std::string> class_names,
                 std::vector<std::string> feature_names = {});

  // Maps raw label strings to class indices. If every distinct label parses
  // fully as a number the classes are ordered numerically, otherwise
  // lexicographically; the mapping is recorded in class_names().
  static LabeledDataset from_raw_labels(Matrix values,
                                        const std::vector<std::string>& raw_labels,
                                        std::vector<std::string> feature_names = {});

  const Matrix& values() const { return values_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  int n_samples() const { return static_cast<int>(values_.rows()); }
  int n_features() const { return static_cast<int>(values_.cols()); }
  int n_classes() const { return static_cast<int>(class_names_.size()); }

  // Row indices of one class, ascending.
  const std::vector<int>& class_rows(int class_idx) const;

private:
  Matrix values_;
  std::vector<int> labels_;
  std::vector<std::string> class_names_;
  std::vector<std::string> feature_names_;
  std::vector<std::vector<int>> class_members_;
};

// Rows of one class restricted to a feature subset; columns follow the
// subset's order.
Matrix class_slice(const LabeledDataset& ds, int class_idx,
                   const FeatureSubset& subset);

// Class-conditional empirical measure of a single feature, uniform weights.
EmpiricalMeasure1D feature_measure(const LabeledDataset& ds, int class_idx,
                                   int feature_idx);

// Per-feature mean and population standard deviation, with degenerate columns
// (sigma ~ 0) flattened to mean = first value, sigma = 1 so they standardize
// to exact zeros.
struct FeatureStats {
  Vector mean;
  Vector sigma;
};

FeatureStats compute_feature_stats(const LabeledDataset& ds);

// (x - mean) / sigma columnwise; labels and names are untouched.
LabeledDataset apply_standardization(const LabeledDataset& ds,
                                     const FeatureStats& stats);

// Convenience: stats from ds applied to ds.
LabeledDataset standardize(const LabeledDataset& ds);

}  // namespace wsel
