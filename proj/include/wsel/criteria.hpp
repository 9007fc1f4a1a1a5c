#pragma once

#include "wsel/dataset.hpp"
#include "wsel/sinkhorn.hpp"

namespace wsel {

// Symmetric K x K matrix of pairwise class-conditional distances with a zero
// diagonal and non-negative entries.
struct ClassDistanceMatrix {
  Matrix d;
};

// Throws std::invalid_argument if the matrix breaks the shape/symmetry/
// diagonal/non-negativity contract (symmetry within 1e-9).
void validate_distance_matrix(const ClassDistanceMatrix& cdm);

enum class EstimatorKind {
  // Exact 1-D W1; only valid for single-feature subsets.
  exact1d_w1,
  // Entropic Sinkhorn W1 (sharp cost) on Euclidean costs; any subset size.
  sinkhorn_w1,
  // Gaussian-kernel MMD; any subset size.
  mmd_gaussian,
};

struct EstimatorChoice {
  EstimatorKind kind = EstimatorKind::sinkhorn_w1;
  SinkhornConfig sinkhorn;
  // Gaussian kernel bandwidth sigma; <= 0 selects the median heuristic
  // (median pairwise distance of the pooled samples) per class pair.
  double mmd_bandwidth = 0.0;
};

const char* estimator_name(EstimatorKind kind);

// Biased V-statistic MMD with Gaussian kernel exp(-||u - v||^2 / (2 sigma^2)).
// The three kernel sums are grouped so mmd(x, x) is exactly zero; a radicand
// below -1e-12 is an error.
double mmd_gaussian(const Matrix& x, const Matrix& y, double bandwidth);

// Median pairwise Euclidean distance of the pooled rows (lower median); falls
// back to 1 when all points coincide.
double median_heuristic_bandwidth(const Matrix& x, const Matrix& y);

// Pairwise class distances on a feature subset under the chosen estimator.
ClassDistanceMatrix distance_matrix(const LabeledDataset& ds,
                                    const FeatureSubset& subset,
                                    const EstimatorChoice& estimator);

// Squared Frobenius norm of the distance matrix: each unordered class pair
// contributes twice.
double utility(const ClassDistanceMatrix& cdm);

// utility(distance_matrix(ds, {feature}, estimator)).
double feature_utility(const LabeledDataset& ds, int feature,
                       const EstimatorChoice& estimator);

}  // namespace wsel
