#pragma once

#include "wsel/dataset.hpp"

namespace wsel {

// 1-Wasserstein distance between two uniform measures with the same atom
// count: mean absolute difference of sorted atoms. Throws
// std::invalid_argument for non-uniform weights or unequal sizes (use
// w1_general for those).
double w1_equal_size(const EmpiricalMeasure1D& p, const EmpiricalMeasure1D& q);

// 1-Wasserstein distance between arbitrary weighted measures via the area
// between their CDFs, accumulated in a single merge sweep. O(n + m) after the
// measures' own sorting.
double w1_general(const EmpiricalMeasure1D& p, const EmpiricalMeasure1D& q);

// p-Wasserstein distance (order >= 1) between arbitrary weighted measures via
// the quantile-function form: integrate |Fp^{-1}(r) - Fq^{-1}(r)|^order over
// r in (0,1) piecewise between merged cumulative-weight breakpoints, then take
// the order-th root.
double wp_general(const EmpiricalMeasure1D& p, const EmpiricalMeasure1D& q,
                  double order);

}  // namespace wsel
