#pragma once

#include "wsel/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wsel {

// Gaussian class-shift benchmark family: informative features are N(k*shift, 1)
// for class k, the rest are N(0,1) plus an independent N(0, noise_sigma^2)
// perturbation. Generation is bit-reproducible for a given spec: a fixed
// mt19937_64 stream feeds a Box-Muller transform (std::normal_distribution is
// implementation-defined, so it is not used), and every non-informative cell
// consumes two draws whether or not noise_sigma is zero, so changing only the
// noise level leaves the informative columns untouched.
struct SyntheticSpec {
  int n_per_class = 0;
  int classes = 0;
  int features = 0;
  std::vector<int> informative;
  double shift = 0.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

// Parses {"n_per_class":..,"classes":..,"features":..,"informative":[..],
// "shift":..,"noise_sigma":..,"seed":..} with noise_sigma optional
// (default 0) and everything else, seed included, required. Unknown keys are
// rejected.
SyntheticSpec parse_synthetic_spec(const std::string& json_text);

// Rows come out class-major (all of class 0, then class 1, ...); class names
// are "0".."K-1" and feature names "f0".."f{d-1}".
LabeledDataset gen_synthetic(const SyntheticSpec& spec);

}  // namespace wsel
