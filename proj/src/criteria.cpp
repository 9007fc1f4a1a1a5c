#include "wsel/criteria.hpp"

#include "wsel/ot1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wsel {

void validate_distance_matrix(const ClassDistanceMatrix& cdm) {
  const Eigen::Index k = cdm.d.rows();
  if (k < 2 || cdm.d.cols() != k) {
    throw std::invalid_argument("class distance matrix must be square with K >= 2");
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (cdm.d(i, i) != 0.0) {
      throw std::invalid_argument("class distance matrix diagonal must be zero");
    }
    for (Eigen::Index j = 0; j < k; ++j) {
      const double v = cdm.d(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(
            "class distance matrix entries must be finite and >= 0");
      }
      if (std::abs(v - cdm.d(j, i)) > 1e-9) {
        throw std::invalid_argument("class distance matrix must be symmetric");
      }
    }
  }
}

const char* estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::exact1d_w1: return "exact1d";
    case EstimatorKind::sinkhorn_w1: return "sinkhorn";
    case EstimatorKind::mmd_gaussian: return "mmd";
  }
  throw std::invalid_argument("unknown estimator kind");
}

double mmd_gaussian(const Matrix& x, const Matrix& y, double bandwidth) {
  if (x.cols() != y.cols()) {
    throw std::invalid_argument("mmd inputs have different dimensions");
  }
  if (x.rows() == 0 || y.rows() == 0) {
    throw std::invalid_argument("mmd inputs must be non-empty");
  }
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("mmd bandwidth must be positive");
  }
  const double scale = -1.0 / (2.0 * bandwidth * bandwidth);
  const Eigen::Index m = x.rows();
  const Eigen::Index n = y.rows();

  auto self_sum = [&](const Matrix& z) {
    // Full double sum including the diagonal (each diagonal term is 1),
    // grouped as 2 * (upper triangle) + diagonal.
    const Eigen::Index r = z.rows();
    double off = 0.0;
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = i + 1; j < r; ++j) {
        off += std::exp(scale * (z.row(i) - z.row(j)).squaredNorm());
      }
    }
    return static_cast<double>(r) + 2.0 * off;
  };
  double cross = 0.0;
  if (m == n) {
    // Mirror the self_sum accumulation order (pairs first, diagonal last).
    // For x == y every step then rounds identically to self_sum's — doubling
    // and the final diagonal add are exact — so the combination below cancels
    // to exactly zero instead of sqrt(rounding noise).
    double diag = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        cross += std::exp(scale * (x.row(i) - y.row(j)).squaredNorm()) +
                 std::exp(scale * (x.row(j) - y.row(i)).squaredNorm());
      }
      diag += std::exp(scale * (x.row(i) - y.row(i)).squaredNorm());
    }
    cross += diag;
  } else {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        cross += std::exp(scale * (x.row(i) - y.row(j)).squaredNorm());
      }
    }
  }
  const double mm = static_cast<double>(m);
  const double nn = static_cast<double>(n);
  const double sq = self_sum(x) / (mm * mm) - 2.0 * cross / (mm * nn) +
                    self_sum(y) / (nn * nn);
  if (sq < -1e-12) {
    throw std::runtime_error("mmd: squared value " + std::to_string(sq) +
                             " below tolerance; kernel sums are inconsistent");
  }
  return std::sqrt(std::max(sq, 0.0));
}

double median_heuristic_bandwidth(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.cols()) {
    throw std::invalid_argument("bandwidth inputs have different dimensions");
  }
  Matrix pooled(x.rows() + y.rows(), x.cols());
  pooled << x, y;
  const Eigen::Index n = pooled.rows();
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      dists.push_back((pooled.row(i) - pooled.row(j)).norm());
    }
  }
  if (dists.empty()) return 1.0;
  const std::size_t mid = (dists.size() - 1) / 2;
  std::nth_element(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(mid),
                   dists.end());
  const double median = dists[mid];
  return median > 0.0 ? median : 1.0;
}

ClassDistanceMatrix distance_matrix(const LabeledDataset& ds,
                                    const FeatureSubset& subset,
                                    const EstimatorChoice& estimator) {
  validate_subset(subset, ds.n_features());
  if (subset.empty()) {
    throw std::invalid_argument("distance_matrix needs a non-empty feature subset");
  }
  if (estimator.kind == EstimatorKind::exact1d_w1 && subset.size() != 1) {
    throw std::invalid_argument(
        "exact1d estimator evaluates single features only; got a subset of "
        "size " + std::to_string(subset.size()));
  }
  const int k = ds.n_classes();
  ClassDistanceMatrix cdm;
  cdm.d = Matrix::Zero(k, k);

  if (estimator.kind == EstimatorKind::exact1d_w1) {
    std::vector<EmpiricalMeasure1D> measures;
    measures.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      measures.push_back(feature_measure(ds, c, subset.indices[0]));
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const double w = w1_general(measures[static_cast<std::size_t>(i)],
                                    measures[static_cast<std::size_t>(j)]);
        cdm.d(i, j) = w;
        cdm.d(j, i) = w;
      }
    }
    return cdm;
  }

  std::vector<Matrix> slices;
  slices.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    slices.push_back(class_slice(ds, c, subset));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double dist = 0.0;
      const Matrix& xi = slices[static_cast<std::size_t>(i)];
      const Matrix& xj = slices[static_cast<std::size_t>(j)];
      if (estimator.kind == EstimatorKind::sinkhorn_w1) {
        dist = w1_sinkhorn(xi, xj, estimator.sinkhorn);
      } else {
        const double bw = estimator.mmd_bandwidth > 0.0
                              ? estimator.mmd_bandwidth
                              : median_heuristic_bandwidth(xi, xj);
        dist = mmd_gaussian(xi, xj, bw);
      }
      cdm.d(i, j) = dist;
      cdm.d(j, i) = dist;
    }
  }
  return cdm;
}

double utility(const ClassDistanceMatrix& cdm) {
  validate_distance_matrix(cdm);
  double total = 0.0;
  const Eigen::Index k = cdm.d.rows();
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      total += 2.0 * cdm.d(i, j) * cdm.d(i, j);
    }
  }
  return total;
}

double feature_utility(const LabeledDataset& ds, int feature,
                       const EstimatorChoice& estimator) {
  return utility(distance_matrix(ds, FeatureSubset::single(feature), estimator));
}

}  // namespace wsel
