#include "wsel/criteria.hpp"

#include "wsel/ot1d.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using wsel::ClassDistanceMatrix;
using wsel::EstimatorChoice;
using wsel::EstimatorKind;
using wsel::FeatureSubset;
using wsel::LabeledDataset;
using wsel::Matrix;
using wsel::testing::Rng;

namespace {

EstimatorChoice exact1d() {
  EstimatorChoice e;
  e.kind = EstimatorKind::exact1d_w1;
  return e;
}

EstimatorChoice sinkhorn(double eps = 0.05) {
  EstimatorChoice e;
  e.kind = EstimatorKind::sinkhorn_w1;
  e.sinkhorn.epsilon = eps;
  return e;
}

EstimatorChoice mmd(double bandwidth = 0.0) {
  EstimatorChoice e;
  e.kind = EstimatorKind::mmd_gaussian;
  e.mmd_bandwidth = bandwidth;
  return e;
}

// Deterministic Gaussian-ish dataset with per-class location shifts on
// every feature.
LabeledDataset shifted_classes(Rng& rng, int k, int n_per_class, int d,
                               double shift) {
  Matrix values(k * n_per_class, d);
  std::vector<int> labels(static_cast<std::size_t>(k) *
                          static_cast<std::size_t>(n_per_class));
  int row = 0;
  for (int c = 0; c < k; ++c) {
    for (int s = 0; s < n_per_class; ++s, ++row) {
      labels[static_cast<std::size_t>(row)] = c;
      for (int j = 0; j < d; ++j) {
        values(row, j) = c * shift + rng.normal();
      }
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) names[static_cast<std::size_t>(c)] = std::to_string(c);
  return LabeledDataset(std::move(values), std::move(labels), std::move(names));
}

}  // namespace

TEST_CASE("exact 1-D distance matrix on a two-class fixture") {
  Matrix values(4, 1);
  values << 0.0, 1.0, 2.0, 3.0;
  const LabeledDataset ds(values, {0, 0, 1, 1}, {"a", "b"});
  const ClassDistanceMatrix cdm =
      wsel::distance_matrix(ds, FeatureSubset::single(0), exact1d());
  CHECK(cdm.d(0, 0) == 0.0);
  CHECK(cdm.d(1, 1) == 0.0);
  CHECK(cdm.d(0, 1) == 2.0);
  CHECK(cdm.d(1, 0) == 2.0);
  CHECK(wsel::utility(cdm) == 8.0);
  CHECK(wsel::feature_utility(ds, 0, exact1d()) == 8.0);
}

TEST_CASE("three-class point masses give the expected matrix and utility") {
  Matrix values(3, 1);
  values << 0.0, 1.0, 4.0;
  const LabeledDataset ds(values, {0, 1, 2}, {"a", "b", "c"});
  const ClassDistanceMatrix cdm =
      wsel::distance_matrix(ds, FeatureSubset::single(0), exact1d());
  CHECK(cdm.d(0, 1) == 1.0);
  CHECK(cdm.d(0, 2) == 4.0);
  CHECK(cdm.d(1, 2) == 3.0);
  // 2 * (1 + 16 + 9)
  CHECK(wsel::utility(cdm) == 52.0);
}

TEST_CASE("identical class distributions give zero utility") {
  Matrix values(4, 1);
  values << 1.0, 2.0, 1.0, 2.0;
  const LabeledDataset ds(values, {0, 0, 1, 1}, {"a", "b"});
  CHECK(wsel::feature_utility(ds, 0, exact1d()) == 0.0);
}

TEST_CASE("constant features carry zero utility") {
  Matrix values(4, 2);
  values << 7.0, 0.0, 7.0, 1.0, 7.0, 5.0, 7.0, 6.0;
  const LabeledDataset ds(values, {0, 0, 1, 1}, {"a", "b"});
  CHECK(wsel::feature_utility(ds, 0, exact1d()) == 0.0);
  CHECK(wsel::feature_utility(ds, 0, sinkhorn()) == 0.0);
  CHECK(wsel::feature_utility(ds, 0, mmd()) == 0.0);
}

TEST_CASE("exact1d refuses multi-feature subsets") {
  Matrix values(4, 2);
  values << 0.0, 1.0, 1.0, 0.0, 2.0, 3.0, 3.0, 2.0;
  const LabeledDataset ds(values, {0, 0, 1, 1}, {"a", "b"});
  CHECK_THROWS_AS(wsel::distance_matrix(ds, FeatureSubset{{0, 1}}, exact1d()),
                  std::invalid_argument);
  CHECK_NOTHROW(wsel::distance_matrix(ds, FeatureSubset{{0, 1}}, sinkhorn()));
  CHECK_NOTHROW(wsel::distance_matrix(ds, FeatureSubset{{0, 1}}, mmd()));
}

TEST_CASE("distance matrix validation catches broken inputs") {
  ClassDistanceMatrix bad;
  bad.d = Matrix::Zero(2, 2);
  bad.d(0, 1) = 1.0;  // asymmetric
  CHECK_THROWS_AS(wsel::validate_distance_matrix(bad), std::invalid_argument);
  bad.d(1, 0) = 1.0;
  CHECK_NOTHROW(wsel::validate_distance_matrix(bad));
  bad.d(0, 0) = 0.5;  // non-zero diagonal
  CHECK_THROWS_AS(wsel::validate_distance_matrix(bad), std::invalid_argument);
}

TEST_CASE("relabeling classes permutes the distance matrix consistently") {
  Rng rng(301);
  const LabeledDataset ds = shifted_classes(rng, 3, 12, 2, 1.5);
  // Swap class ids 0 and 2.
  std::vector<int> permuted_labels = ds.labels();
  for (auto& l : permuted_labels) l = 2 - l;
  const LabeledDataset swapped(ds.values(), permuted_labels,
                               {"2", "1", "0"});

  for (const EstimatorChoice& est : {exact1d(), sinkhorn(), mmd(1.0)}) {
    if (est.kind == EstimatorKind::exact1d_w1) {
      const ClassDistanceMatrix a =
          wsel::distance_matrix(ds, FeatureSubset::single(0), est);
      const ClassDistanceMatrix b =
          wsel::distance_matrix(swapped, FeatureSubset::single(0), est);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          CHECK(a.d(i, j) == b.d(2 - i, 2 - j));
        }
      }
    } else {
      const ClassDistanceMatrix a =
          wsel::distance_matrix(ds, FeatureSubset{{0, 1}}, est);
      const ClassDistanceMatrix b =
          wsel::distance_matrix(swapped, FeatureSubset{{0, 1}}, est);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          // Swapping class ids swaps source and target roles; Sinkhorn stops
          // on a one-sided marginal criterion, so the sharp cost moves by up
          // to O(tol * max cost) under the swap.
          CHECK(std::abs(a.d(i, j) - b.d(2 - i, 2 - j)) <=
                1e-5 * std::max(1.0, a.d(i, j)));
        }
      }
    }
  }
}

TEST_CASE("single-feature sinkhorn agrees with the exact 1-D estimator") {
  Rng rng(302);
  EstimatorChoice est = sinkhorn(0.01);
  for (int rep = 0; rep < 5; ++rep) {
    const LabeledDataset ds = shifted_classes(rng, 2, 20, 1, 2.0);
    const double exact = wsel::feature_utility(ds, 0, exact1d());
    const double approx = wsel::feature_utility(ds, 0, est);
    CHECK(std::abs(approx - exact) <= 0.02 * exact);
  }
}

TEST_CASE("mmd of a set against itself is exactly zero") {
  Rng rng(303);
  const Matrix x = wsel::testing::random_cloud(rng, 15, 3, -2, 2);
  CHECK(wsel::mmd_gaussian(x, x, 1.3) == 0.0);
}

TEST_CASE("mmd between singletons has a closed form") {
  Matrix x(1, 2), y(1, 2);
  x << 0.0, 0.0;
  y << 3.0, 4.0;  // distance 5
  const double sigma = 2.0;
  const double expected = std::sqrt(2.0 - 2.0 * std::exp(-25.0 / (2.0 * sigma * sigma)));
  CHECK(wsel::mmd_gaussian(x, y, sigma) ==
        doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("grouped mmd matches a naive double-sum evaluation") {
  Rng rng(304);
  for (int rep = 0; rep < 10; ++rep) {
    const int m = rng.uniform_int(2, 12);
    const int n = rng.uniform_int(2, 12);
    const Matrix x = wsel::testing::random_cloud(rng, m, 2, -3, 3);
    const Matrix y = wsel::testing::random_cloud(rng, n, 2, -3, 3);
    const double sigma = rng.uniform(0.5, 3.0);

    // Naive form: signed weights 1/m and -1/n, full double sum.
    Matrix pooled(m + n, 2);
    pooled << x, y;
    std::vector<double> w(static_cast<std::size_t>(m + n));
    for (int i = 0; i < m + n; ++i) {
      w[static_cast<std::size_t>(i)] = i < m ? 1.0 / m : -1.0 / n;
    }
    double acc = 0.0;
    for (int i = 0; i < m + n; ++i) {
      for (int j = 0; j < m + n; ++j) {
        const double k = std::exp(-(pooled.row(i) - pooled.row(j)).squaredNorm() /
                                  (2.0 * sigma * sigma));
        acc += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] * k;
      }
    }
    const double naive = std::sqrt(std::max(acc, 0.0));
    const double grouped = wsel::mmd_gaussian(x, y, sigma);
    CHECK(std::abs(naive - grouped) <= 1e-9);
  }
}

TEST_CASE("mmd is symmetric and non-negative") {
  Rng rng(305);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix x = wsel::testing::random_cloud(rng, rng.uniform_int(1, 10), 2, -3, 3);
    const Matrix y = wsel::testing::random_cloud(rng, rng.uniform_int(1, 10), 2, -3, 3);
    const double xy = wsel::mmd_gaussian(x, y, 1.0);
    const double yx = wsel::mmd_gaussian(y, x, 1.0);
    CHECK(xy >= 0.0);
    CHECK(std::abs(xy - yx) <= 1e-12);
  }
}

TEST_CASE("mmd rejects non-positive bandwidths while the median heuristic fills in") {
  Matrix x(2, 1), y(2, 1);
  x << 0.0, 1.0;
  y << 2.0, 3.0;
  CHECK_THROWS_AS(wsel::mmd_gaussian(x, y, 0.0), std::invalid_argument);
  CHECK(wsel::median_heuristic_bandwidth(x, y) > 0.0);
  // All-coincident points fall back to bandwidth 1.
  const Matrix z = Matrix::Zero(3, 1);
  CHECK(wsel::median_heuristic_bandwidth(z, z) == 1.0);
}

TEST_CASE("utility counts each unordered pair twice") {
  ClassDistanceMatrix cdm;
  cdm.d = Matrix::Zero(3, 3);
  cdm.d(0, 1) = cdm.d(1, 0) = 1.0;
  cdm.d(0, 2) = cdm.d(2, 0) = 4.0;
  cdm.d(1, 2) = cdm.d(2, 1) = 3.0;
  CHECK(wsel::utility(cdm) == 52.0);
}
