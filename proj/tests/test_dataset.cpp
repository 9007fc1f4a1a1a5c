#include "wsel/dataset.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using wsel::EmpiricalMeasure1D;
using wsel::FeatureSubset;
using wsel::LabeledDataset;
using wsel::Matrix;

namespace {

LabeledDataset four_sample_two_class() {
  Matrix values(4, 2);
  values << 1.0, 10.0,
            2.0, 20.0,
            3.0, 30.0,
            4.0, 40.0;
  return LabeledDataset(values, {0, 1, 0, 1}, {"a", "b"});
}

LabeledDataset random_dataset(wsel::testing::Rng& rng, int n, int d, int k) {
  Matrix values = wsel::testing::random_cloud(rng, n, d, -5.0, 5.0);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = i < k ? i : rng.uniform_int(0, k - 1);
  }
  std::vector<std::string> names(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) names[static_cast<std::size_t>(c)] = std::to_string(c);
  return LabeledDataset(std::move(values), std::move(labels), std::move(names));
}

}  // namespace

TEST_CASE("class_slice extracts the right rows and columns") {
  const LabeledDataset ds = four_sample_two_class();
  const Matrix s = wsel::class_slice(ds, 0, FeatureSubset::single(1));
  REQUIRE(s.rows() == 2);
  REQUIRE(s.cols() == 1);
  CHECK(s(0, 0) == 10.0);
  CHECK(s(1, 0) == 30.0);

  // Column order follows the subset, not the dataset.
  const Matrix r = wsel::class_slice(ds, 1, FeatureSubset{{1, 0}});
  CHECK(r(0, 0) == 20.0);
  CHECK(r(0, 1) == 2.0);
  CHECK(r(1, 0) == 40.0);
  CHECK(r(1, 1) == 4.0);
}

TEST_CASE("class_slice rejects bad inputs") {
  const LabeledDataset ds = four_sample_two_class();
  CHECK_THROWS_AS(wsel::class_slice(ds, 2, FeatureSubset::single(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(wsel::class_slice(ds, 0, FeatureSubset{{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(wsel::class_slice(ds, 0, FeatureSubset{{2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(wsel::class_slice(ds, 0, FeatureSubset{{}}),
                  std::invalid_argument);
}

TEST_CASE("single-class data is rejected") {
  Matrix values(2, 1);
  values << 1.0, 2.0;
  CHECK_THROWS_AS(LabeledDataset::from_raw_labels(values, {"x", "x"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LabeledDataset(values, {0, 0}, {"x"}), std::invalid_argument);
}

TEST_CASE("every declared class needs at least one sample") {
  Matrix values(2, 1);
  values << 1.0, 2.0;
  CHECK_THROWS_WITH_AS(LabeledDataset(values, {0, 0}, {"a", "b"}),
                       doctest::Contains("'b' has no samples"),
                       std::invalid_argument);
}

TEST_CASE("non-finite values are rejected") {
  Matrix values(2, 2);
  values << 1.0, 2.0, std::nan(""), 4.0;
  CHECK_THROWS_AS(LabeledDataset(values, {0, 1}, {"a", "b"}),
                  std::invalid_argument);
}

TEST_CASE("label mapping is lexicographic for non-numeric labels") {
  Matrix values(3, 1);
  values << 1.0, 2.0, 3.0;
  const LabeledDataset ds = LabeledDataset::from_raw_labels(values, {"b", "a", "b"});
  CHECK(ds.class_names() == std::vector<std::string>{"a", "b"});
  CHECK(ds.labels() == std::vector<int>{1, 0, 1});
}

TEST_CASE("label mapping is numeric when every label parses as a number") {
  Matrix values(3, 1);
  values << 1.0, 2.0, 3.0;
  const LabeledDataset ds =
      LabeledDataset::from_raw_labels(values, {"10", "2", "10"});
  // "10" would sort before "2" lexicographically; numerically it must not.
  CHECK(ds.class_names() == std::vector<std::string>{"2", "10"});
  CHECK(ds.labels() == std::vector<int>{1, 0, 1});

  const LabeledDataset mixed =
      LabeledDataset::from_raw_labels(values, {"x", "2", "x"});
  CHECK(mixed.class_names() == std::vector<std::string>{"2", "x"});
}

TEST_CASE("feature_measure sorts atoms and spreads weight uniformly") {
  Matrix values(5, 1);
  values << 3.0, 1.0, 2.0, 0.0, 0.0;
  const LabeledDataset ds =
      LabeledDataset(values, {0, 0, 0, 1, 1}, {"a", "b"});
  const EmpiricalMeasure1D m = wsel::feature_measure(ds, 0, 0);
  CHECK(m.values() == std::vector<double>{1.0, 2.0, 3.0});
  for (double w : m.weights()) CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-15));

  // Duplicates stay as separate atoms.
  const EmpiricalMeasure1D dup = wsel::feature_measure(ds, 1, 0);
  CHECK(dup.values() == std::vector<double>{0.0, 0.0});
  CHECK(dup.weights() == std::vector<double>{0.5, 0.5});
}

TEST_CASE("measure constructor enforces its invariants") {
  CHECK_THROWS_AS(EmpiricalMeasure1D({2.0, 1.0}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalMeasure1D({1.0, 2.0}, {0.5, -0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalMeasure1D({1.0, 2.0}, {0.5, 0.6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalMeasure1D({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalMeasure1D({1.0, 2.0}, {1.0, 0.0}),
                  std::invalid_argument);
  // from_weighted sorts on the caller's behalf.
  const EmpiricalMeasure1D m =
      EmpiricalMeasure1D::from_weighted({2.0, 1.0}, {0.25, 0.75});
  CHECK(m.values() == std::vector<double>{1.0, 2.0});
  CHECK(m.weights() == std::vector<double>{0.75, 0.25});
}

TEST_CASE("class slices partition the dataset rows") {
  wsel::testing::Rng rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    const int k = rng.uniform_int(2, 4);
    const int n = rng.uniform_int(k, 30);
    const int d = rng.uniform_int(1, 6);
    const LabeledDataset ds = random_dataset(rng, n, d, k);
    const FeatureSubset all = FeatureSubset::all(d);

    std::vector<std::vector<double>> collected;
    for (int c = 0; c < k; ++c) {
      const Matrix s = wsel::class_slice(ds, c, all);
      REQUIRE(static_cast<std::size_t>(s.rows()) == ds.class_rows(c).size());
      for (Eigen::Index i = 0; i < s.rows(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) row[static_cast<std::size_t>(j)] = s(i, j);
        collected.push_back(std::move(row));
      }
    }
    std::vector<std::vector<double>> original;
    for (int i = 0; i < n; ++i) {
      std::vector<double> row(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) row[static_cast<std::size_t>(j)] = ds.values()(i, j);
      original.push_back(std::move(row));
    }
    std::sort(collected.begin(), collected.end());
    std::sort(original.begin(), original.end());
    CHECK(collected == original);
  }
}

TEST_CASE("feature_measure weights always sum to one") {
  wsel::testing::Rng rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const int k = rng.uniform_int(2, 4);
    const int n = rng.uniform_int(k, 40);
    const LabeledDataset ds = random_dataset(rng, n, 3, k);
    for (int c = 0; c < k; ++c) {
      const EmpiricalMeasure1D m = wsel::feature_measure(ds, c, 1);
      double total = 0.0;
      for (double w : m.weights()) total += w;
      CHECK(std::abs(total - 1.0) <= 1e-12);
      CHECK(std::is_sorted(m.values().begin(), m.values().end()));
    }
  }
}

TEST_CASE("standardize centers and scales each feature") {
  Matrix values(2, 1);
  values << 0.0, 2.0;
  const LabeledDataset ds = LabeledDataset(values, {0, 1}, {"a", "b"});
  const LabeledDataset z = wsel::standardize(ds);
  // Population sigma of {0, 2} is 1.
  CHECK(z.values()(0, 0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(z.values()(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("standardize maps constant features to exact zeros") {
  Matrix values(3, 2);
  values << 5.0, 1.0, 5.0, 2.0, 5.0, 4.0;
  const LabeledDataset ds = LabeledDataset(values, {0, 1, 0}, {"a", "b"});
  const LabeledDataset z = wsel::standardize(ds);
  for (int i = 0; i < 3; ++i) CHECK(z.values()(i, 0) == 0.0);
}

TEST_CASE("standardize matches a direct recomputation") {
  wsel::testing::Rng rng(44);
  const LabeledDataset ds = random_dataset(rng, 23, 4, 3);
  const LabeledDataset z = wsel::standardize(ds);
  for (int j = 0; j < 4; ++j) {
    double mean = 0.0;
    for (int i = 0; i < 23; ++i) mean += ds.values()(i, j);
    mean /= 23.0;
    double var = 0.0;
    for (int i = 0; i < 23; ++i) {
      var += (ds.values()(i, j) - mean) * (ds.values()(i, j) - mean);
    }
    const double sigma = std::sqrt(var / 23.0);
    for (int i = 0; i < 23; ++i) {
      CHECK(z.values()(i, j) ==
            doctest::Approx((ds.values()(i, j) - mean) / sigma).epsilon(1e-12));
    }
  }
}

TEST_CASE("standardize is idempotent") {
  wsel::testing::Rng rng(45);
  for (int rep = 0; rep < 10; ++rep) {
    const LabeledDataset ds = random_dataset(rng, rng.uniform_int(5, 40), 3, 2);
    const LabeledDataset once = wsel::standardize(ds);
    const LabeledDataset twice = wsel::standardize(once);
    for (int i = 0; i < ds.n_samples(); ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(once.values()(i, j) - twice.values()(i, j)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("train statistics can standardize held-out data") {
  Matrix tr(2, 1), te(2, 1);
  tr << 0.0, 2.0;
  te << 4.0, -2.0;
  const LabeledDataset train = LabeledDataset(tr, {0, 1}, {"a", "b"});
  const LabeledDataset test = LabeledDataset(te, {0, 1}, {"a", "b"});
  const wsel::FeatureStats stats = wsel::compute_feature_stats(train);
  const LabeledDataset scaled = wsel::apply_standardization(test, stats);
  CHECK(scaled.values()(0, 0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(scaled.values()(1, 0) == doctest::Approx(-3.0).epsilon(1e-15));
}
