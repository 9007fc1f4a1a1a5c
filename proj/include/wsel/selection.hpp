#pragma once

#include "wsel/criteria.hpp"
#include "wsel/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wsel {

struct SelectionConfig {
  // Number of features to keep, 1 <= m <= d.
  int m = 1;
  // Features added (fawd) or eliminated (bewd) per step; ranking methods
  // ignore it. Elimination never overshoots below m.
  int group_size = 1;
  EstimatorChoice estimator;
  // Reserved for randomized tie-breaking; the shipped strategies are fully
  // deterministic and only echo it into reports.
  std::uint64_t seed = 0;
};

struct SelectionResult {
  // Selected feature indices. twd: descending utility; fawd: insertion
  // order; bewd: survivors, strongest first.
  std::vector<int> selected;
  // twd: per-feature utilities aligned with `selected`. fawd/bewd: utility
  // of the retained set after each step.
  std::vector<double> scores;
  std::string method;
  SelectionConfig config;
};

// Ranks features by single-feature utility (descending, ties to the lower
// index) and keeps the top m.
SelectionResult twd(const LabeledDataset& ds, const SelectionConfig& config);

// Greedy forward selection: each step evaluates every remaining candidate
// joined to the current set and adds the top group_size of them (ties to the
// lower index). A group step may overshoot m; the result is truncated to m.
SelectionResult fawd(const LabeledDataset& ds, const SelectionConfig& config);

// Backward elimination: each step evaluates the remaining set minus each
// candidate and drops the group_size candidates whose removal keeps utility
// highest (ties eliminate the higher index), never dropping below m
// survivors. Survivors are ordered by their removal utility in the last
// round, ascending, so the feature the criterion held on to hardest comes
// first; with m = d no step runs and the original order is kept.
SelectionResult bewd(const LabeledDataset& ds, const SelectionConfig& config);

}  // namespace wsel
