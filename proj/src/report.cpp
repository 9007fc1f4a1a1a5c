#include "wsel/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace wsel {

namespace {

class Fnv1a64 {
public:
  void feed_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void feed(double v) { feed_bytes(&v, sizeof v); }
  void feed(std::int64_t v) { feed_bytes(&v, sizeof v); }
  void feed(const std::string& s) {
    feed_bytes(s.data(), s.size());
    feed_bytes("\0", 1);  // separator so {"ab","c"} != {"a","bc"}
  }
  std::uint64_t value() const { return hash_; }

private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

DatasetFingerprint fingerprint(const LabeledDataset& ds) {
  Fnv1a64 h;
  h.feed(static_cast<std::int64_t>(ds.n_samples()));
  h.feed(static_cast<std::int64_t>(ds.n_features()));
  for (int i = 0; i < ds.n_samples(); ++i) {
    for (int j = 0; j < ds.n_features(); ++j) {
      h.feed(ds.values()(i, j));
    }
  }
  for (int label : ds.labels()) {
    h.feed(static_cast<std::int64_t>(label));
  }
  for (const auto& name : ds.class_names()) h.feed(name);
  for (const auto& name : ds.feature_names()) h.feed(name);

  DatasetFingerprint fp;
  fp.rows = ds.n_samples();
  fp.cols = ds.n_features();
  fp.classes = ds.n_classes();
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h.value()));
  fp.content_hash = buf;
  return fp;
}

std::string report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["method"] = report.method;
  j["m"] = report.config.m;
  j["group_size"] = report.config.group_size;
  j["seed"] = report.config.seed;
  j["standardize"] = report.standardized;
  j["input"] = report.input;

  nlohmann::json est;
  est["kind"] = estimator_name(report.config.estimator.kind);
  est["epsilon"] = report.config.estimator.sinkhorn.epsilon;
  est["relative_epsilon"] = report.config.estimator.sinkhorn.relative_epsilon;
  est["tol"] = report.config.estimator.sinkhorn.tol;
  est["max_iters"] = report.config.estimator.sinkhorn.max_iters;
  est["mmd_bandwidth"] = report.config.estimator.mmd_bandwidth;
  j["estimator"] = est;

  j["test_frac"] = report.test_frac;
  if (report.split_seed) {
    j["split_seed"] = *report.split_seed;
  }
  j["selected"] = report.selected;
  j["selected_names"] = report.selected_names;
  j["scores"] = report.scores;
  if (report.accuracy) {
    j["accuracy"] = *report.accuracy;
  }
  j["wall_ms"] = report.wall_ms;

  nlohmann::json ds;
  ds["rows"] = report.dataset.rows;
  ds["cols"] = report.dataset.cols;
  ds["classes"] = report.dataset.classes;
  ds["content_hash"] = report.dataset.content_hash;
  j["dataset"] = ds;

  j["version"] = kToolVersion;
  return j.dump(2) + "\n";
}

}  // namespace wsel
