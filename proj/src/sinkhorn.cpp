#include "wsel/sinkhorn.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wsel {

void validate_problem(const TransportProblem& problem) {
  const Eigen::Index n = problem.cost.rows();
  const Eigen::Index m = problem.cost.cols();
  if (n == 0 || m == 0) {
    throw std::invalid_argument("transport problem has an empty side");
  }
  if (problem.a.size() != n || problem.b.size() != m) {
    throw std::invalid_argument("marginal lengths do not match cost matrix shape");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double c = problem.cost(i, j);
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("cost matrix entries must be finite and >= 0");
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(problem.a(i) > 0.0)) {
      throw std::invalid_argument("source marginal must be strictly positive");
    }
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    if (!(problem.b(j) > 0.0)) {
      throw std::invalid_argument("target marginal must be strictly positive");
    }
  }
  if (std::abs(problem.a.sum() - 1.0) > 1e-12 ||
      std::abs(problem.b.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("marginals must each sum to 1 within 1e-12");
  }
}

Matrix cost_matrix(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.cols()) {
    throw std::invalid_argument("point clouds have different dimensions (" +
                                std::to_string(x.cols()) + " vs " +
                                std::to_string(y.cols()) + ")");
  }
  if (x.rows() == 0 || y.rows() == 0) {
    throw std::invalid_argument("point clouds must be non-empty");
  }
  Matrix c(x.rows(), y.rows());
  // Differences are formed explicitly (not via the expanded ||x||^2 + ||y||^2
  // - 2<x,y> identity) so identical rows give an exact zero.
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.rows(); ++j) {
      c(i, j) = (x.row(i) - y.row(j)).norm();
    }
  }
  return c;
}

namespace {

void check_config(const SinkhornConfig& config) {
  if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) {
    throw std::invalid_argument("sinkhorn epsilon must be positive and finite");
  }
  if (!(config.tol > 0.0)) {
    throw std::invalid_argument("sinkhorn tol must be positive");
  }
  if (config.max_iters < 1) {
    throw std::invalid_argument("sinkhorn max_iters must be >= 1");
  }
}

}  // namespace

SinkhornResult sinkhorn(const TransportProblem& problem,
                        const SinkhornConfig& config) {
  validate_problem(problem);
  check_config(config);

  const Eigen::Index n = problem.cost.rows();
  const Eigen::Index m = problem.cost.cols();
  const Matrix& cost = problem.cost;
  const Vector& a = problem.a;
  const Vector& b = problem.b;

  SinkhornResult result;

  // Zero cost everywhere: every feasible plan is optimal, so return the
  // product coupling directly. This also covers the relative-epsilon mode,
  // which would otherwise degenerate to eps = 0.
  if (cost.maxCoeff() <= 0.0) {
    result.plan = a * b.transpose();
    result.sharp_cost = 0.0;
    result.iterations = 0;
    const double row_err = (result.plan.rowwise().sum() - a).cwiseAbs().sum();
    const double col_err =
        (result.plan.colwise().sum().transpose() - b).cwiseAbs().sum();
    result.marginal_error = std::max(row_err, col_err);
    result.converged = true;
    return result;
  }

  const double mean_cost = cost.mean();
  const double eps =
      config.relative_epsilon ? config.epsilon * mean_cost : config.epsilon;

  // Annealing schedule: halve from the cost scale down to the target. The
  // warm-up stages only have to hand over decent potentials, so they run
  // with a loose tolerance and a small iteration cap.
  std::vector<double> stages;
  for (double e = mean_cost; e > eps * 1.0000000001; e *= 0.5) {
    stages.push_back(e);
  }
  stages.push_back(eps);

  Vector f = Vector::Zero(n);
  Vector g = Vector::Zero(m);
  Vector u = Vector::Ones(n);
  Vector v = Vector::Ones(m);
  Matrix kernel(n, m);
  Vector kv(n), ktu(m);

  auto rebuild_kernel = [&](double e) {
    kernel = (((-cost).colwise() + f).rowwise() + g.transpose()) / e;
    kernel = kernel.array().exp();
  };
  auto absorb = [&](double e) {
    f += e * u.array().log().matrix();
    g += e * v.array().log().matrix();
    if (!f.allFinite() || !g.allFinite()) {
      throw std::runtime_error(
          "sinkhorn: potentials became non-finite; epsilon is too small for "
          "the cost scale");
    }
    u.setOnes();
    v.setOnes();
  };

  int iterations = 0;
  bool converged = false;
  bool plan_is_current = false;
  // Stage the returned plan is evaluated at. Normally the target eps; if the
  // iteration budget dies during warm-up it is the stage actually reached, so
  // the best available iterate is returned instead of an overflowing
  // extrapolation to the target.
  double plan_eps = stages.front();

  for (std::size_t s = 0;
       s < stages.size() && !converged && iterations < config.max_iters; ++s) {
    const double e = stages[s];
    plan_eps = e;
    const bool last = (s + 1 == stages.size());
    const double stage_tol = last ? config.tol : std::max(config.tol, 1e-2);
    const int stage_cap = last ? config.max_iters : 60;
    double check_gate = stage_tol;

    rebuild_kernel(e);
    plan_is_current = false;
    int stage_iters = 0;
    while (iterations < config.max_iters && stage_iters < stage_cap) {
      kv.noalias() = kernel * v;
      u = a.array() / kv.array();
      ktu.noalias() = kernel.transpose() * u;
      // Column violation of the plan diag(u) K diag(v) before v is refreshed;
      // free to compute and a faithful staleness signal.
      const double col_err = (v.array() * ktu.array() - b.array()).abs().sum();
      v = b.array() / ktu.array();
      ++iterations;
      ++stage_iters;
      if (!(col_err == col_err)) {
        throw std::runtime_error(
            "sinkhorn: iteration produced NaN; epsilon is too small for the "
            "cost scale");
      }
      if (col_err <= check_gate) {
        if (!last) break;
        // Candidate convergence: fold the scalings and verify both marginals
        // on the actual plan.
        absorb(e);
        rebuild_kernel(e);
        plan_is_current = true;
        const double row_err = (kernel.rowwise().sum() - a).cwiseAbs().sum();
        const double col_exact =
            (kernel.colwise().sum().transpose() - b).cwiseAbs().sum();
        if (std::max(row_err, col_exact) <= config.tol) {
          converged = true;
          break;
        }
        check_gate *= 0.5;
        continue;
      }
      if (u.maxCoeff() > 1e30 || v.maxCoeff() > 1e30 || u.minCoeff() < 1e-30 ||
          v.minCoeff() < 1e-30) {
        absorb(e);
        rebuild_kernel(e);
        plan_is_current = false;
      }
    }
    // Carry the stage's progress into the potentials before eps changes.
    absorb(e);
  }

  if (!plan_is_current || !converged) {
    rebuild_kernel(plan_eps);
  }
  result.plan = std::move(kernel);
  const double row_err = (result.plan.rowwise().sum() - a).cwiseAbs().sum();
  const double col_err =
      (result.plan.colwise().sum().transpose() - b).cwiseAbs().sum();
  result.marginal_error = std::max(row_err, col_err);
  result.sharp_cost = (result.plan.array() * cost.array()).sum();
  result.iterations = iterations;
  result.converged = result.marginal_error <= config.tol;
  if (!result.plan.allFinite() || !std::isfinite(result.sharp_cost)) {
    throw std::runtime_error(
        "sinkhorn: plan became non-finite; epsilon is too small for the cost "
        "scale");
  }
  return result;
}

double w1_sinkhorn(const Matrix& x, const Matrix& y,
                   const SinkhornConfig& config) {
  TransportProblem problem;
  problem.cost = cost_matrix(x, y);
  problem.a = Vector::Constant(x.rows(), 1.0 / static_cast<double>(x.rows()));
  problem.b = Vector::Constant(y.rows(), 1.0 / static_cast<double>(y.rows()));
  return sinkhorn(problem, config).sharp_cost;
}

}  // namespace wsel
