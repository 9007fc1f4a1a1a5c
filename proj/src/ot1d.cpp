#include "wsel/ot1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wsel {

double w1_equal_size(const EmpiricalMeasure1D& p, const EmpiricalMeasure1D& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument(
        "w1_equal_size needs equal atom counts (" + std::to_string(p.size()) +
        " vs " + std::to_string(q.size()) + "); use w1_general instead");
  }
  if (!p.is_uniform() || !q.is_uniform()) {
    throw std::invalid_argument(
        "w1_equal_size needs uniform weights; use w1_general instead");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += std::abs(p.values()[i] - q.values()[i]);
  }
  return sum / static_cast<double>(p.size());
}

double w1_general(const EmpiricalMeasure1D& p, const EmpiricalMeasure1D& q) {
  // Sweep the merged atom positions left to right, integrating
  // |Fp(x) - Fq(x)| over each gap. Atoms at equal positions are both
  // consumed before the gap is charged, so exact ties contribute nothing.
  const auto& pv = p.values();
  const auto& qv = q.values();
  std::size_t i = 0, j = 0;
  double fp = 0.0, fq = 0.0;
  double prev = std::min(pv.front(), qv.front());
  double total = 0.0;
  while (i < pv.size() || j < qv.size()) {
    double x;
    if (j >= qv.size() || (i < pv.size() && pv[i] <= qv[j])) {
      x = pv[i];
    } else {
      x = qv[j];
    }
    total += std::abs(fp - fq) * (x - prev);
    while (i < pv.size() && pv[i] == x) fp += p.weights()[i++];
    while (j < qv.size() && qv[j] == x) fq += q.weights()[j++];
    prev = x;
  }
  return total;
}

double wp_general(const EmpiricalMeasure1D& p, const EmpiricalMeasure1D& q,
                  double order) {
  if (!(order >= 1.0)) {
    throw std::invalid_argument("wasserstein order must be >= 1, got " +
                                std::to_string(order));
  }

  // Cumulative weights, with the final entry clamped to exactly 1 so both
  // quantile functions are defined on all of (0, 1).
  auto cumulative = [](const EmpiricalMeasure1D& m) {
    std::vector<double> c(m.size());
    double run = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      run += m.weights()[i];
      c[i] = run;
    }
    c.back() = 1.0;
    return c;
  };
  const std::vector<double> cp = cumulative(p);
  const std::vector<double> cq = cumulative(q);

  std::vector<double> breaks;
  breaks.reserve(cp.size() + cq.size());
  breaks.insert(breaks.end(), cp.begin(), cp.end());
  breaks.insert(breaks.end(), cq.begin(), cq.end());
  std::sort(breaks.begin(), breaks.end());

  // Both quantile functions are constant strictly between breakpoints, so
  // evaluating them at each segment midpoint is exact and immune to
  // floating-point ties on the breakpoints themselves.
  auto quantile = [](const std::vector<double>& cum,
                     const std::vector<double>& values, double r) {
    const auto it = std::upper_bound(cum.begin(), cum.end(), r);
    const std::size_t idx =
        std::min(static_cast<std::size_t>(it - cum.begin()), values.size() - 1);
    return values[idx];
  };

  double acc = 0.0;
  double prev = 0.0;
  for (double r : breaks) {
    if (r <= prev) continue;
    const double mid = 0.5 * (prev + r);
    const double xp = quantile(cp, p.values(), mid);
    const double xq = quantile(cq, q.values(), mid);
    const double gap = std::abs(xp - xq);
    acc += (order == 1.0 ? gap : std::pow(gap, order)) * (r - prev);
    prev = r;
  }
  return order == 1.0 ? acc : std::pow(acc, 1.0 / order);
}

}  // namespace wsel
