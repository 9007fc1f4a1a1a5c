#pragma once

#include "wsel/dataset.hpp"

namespace wsel {

// Discrete OT instance: cost(i,j) >= 0 finite, marginals strictly positive
// and summing to 1 (within 1e-12).
struct TransportProblem {
  Matrix cost;
  Vector a;
  Vector b;
};

void validate_problem(const TransportProblem& problem);

struct SinkhornConfig {
  // Entropic regularization strength. With relative_epsilon (the default)
  // the effective value is epsilon * mean(cost); otherwise it is taken in
  // cost units as given.
  double epsilon = 0.05;
  bool relative_epsilon = true;
  // Stop once the L1 violation of both marginals is <= tol.
  double tol = 1e-6;
  // Cap on scaling iterations (one iteration = one row and one column
  // update), counted across the annealing warm-up and the final stage.
  int max_iters = 10000;
};

struct SinkhornResult {
  Matrix plan;
  // Sharp transport cost <plan, cost>, i.e. without the entropy term.
  double sharp_cost = 0.0;
  int iterations = 0;
  // L1 violation of the worse marginal, measured on the returned plan.
  double marginal_error = 0.0;
  bool converged = false;
};

// Pairwise Euclidean distance matrix between the rows of x and y.
Matrix cost_matrix(const Matrix& x, const Matrix& y);

// Entropic OT by stabilized Sinkhorn scaling: iterations run on the kernel
// exp((f_i + g_j - C_ij)/eps) with scaling factors that are absorbed into the
// dual potentials f, g before they can overflow, which is the log-domain
// update evaluated lazily. A deterministic annealing schedule (eps halved
// from the mean cost down to the target) warm-starts the potentials; the
// reported plan always comes from the target eps. Throws std::runtime_error
// if the potentials leave the finite range (eps too small for the cost
// scale).
SinkhornResult sinkhorn(const TransportProblem& problem,
                        const SinkhornConfig& config);

// Sinkhorn W1 estimate between two point clouds with uniform weights:
// sharp cost of the entropic plan on their Euclidean cost matrix.
double w1_sinkhorn(const Matrix& x, const Matrix& y,
                   const SinkhornConfig& config);

}  // namespace wsel
