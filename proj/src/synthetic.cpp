#include "wsel/synthetic.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace wsel {

namespace {

// Box-Muller on top of mt19937_64 so the stream is pinned by the standard.
class NormalSampler {
public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

private:
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

void check_spec(const SyntheticSpec& spec) {
  if (spec.n_per_class < 1) {
    throw std::invalid_argument("synthetic spec: n_per_class must be >= 1");
  }
  if (spec.classes < 2) {
    throw std::invalid_argument("synthetic spec: classes must be >= 2");
  }
  if (spec.features < 1) {
    throw std::invalid_argument("synthetic spec: features must be >= 1");
  }
  std::set<int> seen;
  for (int f : spec.informative) {
    if (f < 0 || f >= spec.features) {
      throw std::invalid_argument("synthetic spec: informative index " +
                                  std::to_string(f) + " out of range [0, " +
                                  std::to_string(spec.features) + ")");
    }
    if (!seen.insert(f).second) {
      throw std::invalid_argument("synthetic spec: duplicate informative index " +
                                  std::to_string(f));
    }
  }
  if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
    throw std::invalid_argument("synthetic spec: noise_sigma must be finite and >= 0");
  }
  if (!std::isfinite(spec.shift)) {
    throw std::invalid_argument("synthetic spec: shift must be finite");
  }
}

}  // namespace

SyntheticSpec parse_synthetic_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("synthetic spec is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("synthetic spec must be a JSON object");
  }
  static const std::set<std::string> known = {
      "n_per_class", "classes", "features", "informative",
      "shift",       "noise_sigma", "seed"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (known.find(key) == known.end()) {
      throw std::invalid_argument("synthetic spec: unknown key '" + key + "'");
    }
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("synthetic spec: missing key '") +
                                  key + "'");
    }
    return j.at(key);
  };

  SyntheticSpec spec;
  try {
    spec.n_per_class = require("n_per_class").get<int>();
    spec.classes = require("classes").get<int>();
    spec.features = require("features").get<int>();
    spec.informative = require("informative").get<std::vector<int>>();
    spec.shift = require("shift").get<double>();
    spec.seed = require("seed").get<std::uint64_t>();
    if (j.contains("noise_sigma")) {
      spec.noise_sigma = j.at("noise_sigma").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("synthetic spec: bad field type: ") +
                                e.what());
  }
  check_spec(spec);
  return spec;
}

LabeledDataset gen_synthetic(const SyntheticSpec& spec) {
  check_spec(spec);
  const int k = spec.classes;
  const int n = spec.n_per_class;
  const int d = spec.features;
  std::vector<bool> informative(static_cast<std::size_t>(d), false);
  for (int f : spec.informative) informative[static_cast<std::size_t>(f)] = true;

  NormalSampler rng(spec.seed);
  Matrix values(static_cast<Eigen::Index>(k) * n, d);
  std::vector<int> labels(static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
  Eigen::Index row = 0;
  for (int c = 0; c < k; ++c) {
    for (int s = 0; s < n; ++s, ++row) {
      labels[static_cast<std::size_t>(row)] = c;
      for (int f = 0; f < d; ++f) {
        if (informative[static_cast<std::size_t>(f)]) {
          values(row, f) = static_cast<double>(c) * spec.shift + rng.next();
        } else {
          const double base = rng.next();
          const double noise = rng.next();
          values(row, f) = base + spec.noise_sigma * noise;
        }
      }
    }
  }

  std::vector<std::string> class_names(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) class_names[static_cast<std::size_t>(c)] = std::to_string(c);
  std::vector<std::string> feature_names(static_cast<std::size_t>(d));
  for (int f = 0; f < d; ++f) feature_names[static_cast<std::size_t>(f)] = "f" + std::to_string(f);
  return LabeledDataset(std::move(values), std::move(labels),
                        std::move(class_names), std::move(feature_names));
}

}  // namespace wsel
