#include "wsel/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace wsel {

namespace {

void check_config(const LabeledDataset& ds, const SelectionConfig& config) {
  const int d = ds.n_features();
  if (config.m < 1 || config.m > d) {
    throw std::invalid_argument("m must be in [1, " + std::to_string(d) +
                                "], got " + std::to_string(config.m));
  }
  if (config.group_size < 1) {
    throw std::invalid_argument("group_size must be >= 1, got " +
                                std::to_string(config.group_size));
  }
}

double subset_utility(const LabeledDataset& ds, const std::vector<int>& indices,
                      const EstimatorChoice& estimator, const char* method,
                      int candidate) {
  try {
    return utility(distance_matrix(ds, FeatureSubset{indices}, estimator));
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(method) +
                             ": estimator failed for candidate feature " +
                             std::to_string(candidate) + ": " + e.what());
  }
}

}  // namespace

SelectionResult twd(const LabeledDataset& ds, const SelectionConfig& config) {
  check_config(ds, config);
  const int d = ds.n_features();
  std::vector<double> util(static_cast<std::size_t>(d));
  for (int f = 0; f < d; ++f) {
    util[static_cast<std::size_t>(f)] =
        subset_utility(ds, {f}, config.estimator, "twd", f);
  }
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ua = util[static_cast<std::size_t>(a)];
    const double ub = util[static_cast<std::size_t>(b)];
    if (ua != ub) return ua > ub;
    return a < b;
  });

  SelectionResult result;
  result.method = "twd";
  result.config = config;
  result.selected.assign(order.begin(), order.begin() + config.m);
  result.scores.reserve(static_cast<std::size_t>(config.m));
  for (int f : result.selected) {
    result.scores.push_back(util[static_cast<std::size_t>(f)]);
  }
  return result;
}

SelectionResult fawd(const LabeledDataset& ds, const SelectionConfig& config) {
  check_config(ds, config);
  if (config.estimator.kind == EstimatorKind::exact1d_w1 && config.m > 1) {
    throw std::invalid_argument(
        "exact1d estimator evaluates single features only; fawd with m > 1 "
        "needs a subset-capable estimator (sinkhorn or mmd)");
  }
  const int d = ds.n_features();
  std::vector<int> selected;
  std::vector<bool> in_set(static_cast<std::size_t>(d), false);
  std::vector<double> trace;

  while (static_cast<int>(selected.size()) < config.m) {
    std::vector<std::pair<double, int>> ranked;  // (utility, candidate)
    ranked.reserve(static_cast<std::size_t>(d) - selected.size());
    std::vector<int> trial = selected;
    trial.push_back(-1);
    for (int f = 0; f < d; ++f) {
      if (in_set[static_cast<std::size_t>(f)]) continue;
      trial.back() = f;
      ranked.emplace_back(subset_utility(ds, trial, config.estimator, "fawd", f),
                          f);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    const std::size_t take = std::min(static_cast<std::size_t>(config.group_size),
                                      ranked.size());
    for (std::size_t i = 0; i < take; ++i) {
      selected.push_back(ranked[i].second);
      in_set[static_cast<std::size_t>(ranked[i].second)] = true;
    }
    // Per-step utility of the retained set; a single-candidate step already
    // computed it.
    if (take == 1) {
      trace.push_back(ranked.front().first);
    } else {
      trace.push_back(
          subset_utility(ds, selected, config.estimator, "fawd", selected.back()));
    }
  }
  if (static_cast<int>(selected.size()) > config.m) {
    selected.resize(static_cast<std::size_t>(config.m));
  }

  SelectionResult result;
  result.method = "fawd";
  result.config = config;
  result.selected = std::move(selected);
  result.scores = std::move(trace);
  return result;
}

SelectionResult bewd(const LabeledDataset& ds, const SelectionConfig& config) {
  check_config(ds, config);
  const int d = ds.n_features();
  if (config.estimator.kind == EstimatorKind::exact1d_w1 && config.m < d &&
      d > 2) {
    throw std::invalid_argument(
        "exact1d estimator evaluates single features only; bewd elimination "
        "needs a subset-capable estimator (sinkhorn or mmd)");
  }

  std::vector<int> remaining(static_cast<std::size_t>(d));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<double> trace;
  // Removal utilities from the most recent round, used to order survivors.
  std::vector<std::pair<int, double>> last_round;

  while (static_cast<int>(remaining.size()) > config.m) {
    last_round.clear();
    std::vector<int> trial(remaining.size() - 1);
    for (std::size_t drop = 0; drop < remaining.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (i != drop) trial[w++] = remaining[i];
      }
      last_round.emplace_back(
          remaining[drop],
          subset_utility(ds, trial, config.estimator, "bewd", remaining[drop]));
    }
    // Drop the candidates whose removal hurts least; ties drop the higher
    // index first. Never cut below m survivors.
    std::vector<std::pair<int, double>> ranked = last_round;
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first > b.first;
    });
    const std::size_t cut =
        std::min(static_cast<std::size_t>(config.group_size),
                 remaining.size() - static_cast<std::size_t>(config.m));
    std::vector<bool> dropped(static_cast<std::size_t>(d), false);
    for (std::size_t i = 0; i < cut; ++i) {
      dropped[static_cast<std::size_t>(ranked[i].first)] = true;
    }
    std::vector<int> next;
    next.reserve(remaining.size() - cut);
    for (int f : remaining) {
      if (!dropped[static_cast<std::size_t>(f)]) next.push_back(f);
    }
    remaining = std::move(next);
    if (cut == 1) {
      trace.push_back(ranked.front().second);
    } else {
      trace.push_back(subset_utility(ds, remaining, config.estimator, "bewd",
                                     remaining.front()));
    }
  }

  SelectionResult result;
  result.method = "bewd";
  result.config = config;
  if (last_round.empty()) {
    result.selected = std::move(remaining);  // m == d: nothing was eliminated
  } else {
    std::vector<std::pair<int, double>> survivors;
    survivors.reserve(remaining.size());
    for (const auto& [f, u] : last_round) {
      if (std::find(remaining.begin(), remaining.end(), f) != remaining.end()) {
        survivors.emplace_back(f, u);
      }
    }
    // Lowest removal utility = the set lost the most without it; put those
    // first.
    std::sort(survivors.begin(), survivors.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first < b.first;
    });
    result.selected.reserve(survivors.size());
    for (const auto& [f, u] : survivors) result.selected.push_back(f);
  }
  result.scores = std::move(trace);
  return result;
}

}  // namespace wsel
