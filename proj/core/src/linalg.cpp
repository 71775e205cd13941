#include "rspbc/linalg.hpp"

#include <cmath>
#include <string>

namespace rspbc {

KilledWalkMatrix killed_transition_matrix(const Graph& g,
                                          const TransitionModel& t,
                                          double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ValidationError("beta-nonpositive",
                          "beta must be a positive finite real");
  }
  double max_cost = 0.0;
  for (const Arc& a : g.arcs()) max_cost = std::max(max_cost, a.cost);
  if (beta * max_cost > kBetaCostGuard) {
    throw ValidationError(
        "beta-cost-overflow",
        "beta * max(cost) = " + std::to_string(beta * max_cost) +
            " exceeds the overflow guard (" + std::to_string(kBetaCostGuard) +
            "); rescale the costs or lower beta");
  }
  const int n = g.node_count();
  KilledWalkMatrix killed;
  killed.beta = beta;
  killed.w = Eigen::MatrixXd::Zero(n, n);
  for (const Arc& a : g.arcs()) {
    killed.w(a.src, a.dst) = t.p_ref(a.src, a.dst) * std::exp(-beta * a.cost);
  }
  return killed;
}

FundamentalSolve fundamental_matrix(const KilledWalkMatrix& w) {
  const auto n = w.w.rows();
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - w.w;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  FundamentalSolve solve;
  solve.beta = w.beta;
  solve.reciprocal_condition_estimate = lu.rcond();
  solve.z = lu.inverse();
  solve.residual =
      (system * solve.z - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(solve.residual <= 1e-6) ||
      !(solve.reciprocal_condition_estimate >= 1e-14)) {
    throw NumericalError(
        "singular-system",
        "(I - W) is singular or numerically singular (residual " +
            std::to_string(solve.residual) + ", rcond " +
            std::to_string(solve.reciprocal_condition_estimate) +
            "); beta may be too small for a cost-free cycle, or the input "
            "disconnected");
  }
  // Spectral radius >= 1 shows up as a broken Neumann series: diagonal < 1
  // or negative entries.
  if (solve.z.diagonal().minCoeff() < 1.0 - 1e-9) {
    throw NumericalError("singular-system",
                         "fundamental matrix diagonal fell below 1; the "
                         "killed walk is not substochastic enough");
  }
  return solve;
}

double pair_partition_function(const FundamentalSolve& f, int s, int t) {
  if (s == t) {
    throw ValidationError("identical-pair",
                          "pair partition function requires s != t");
  }
  return f.z(s, t) / f.z(t, t);
}

void require_positive_fundamental(const FundamentalSolve& f) {
  if (f.z.minCoeff() < kZPositiveFloor) {
    throw NumericalError(
        "killed-walk-disconnected",
        "fundamental matrix has a nonpositive or subnormal entry; the killed "
        "walk is effectively disconnected at this beta (cost underflow)");
  }
}

}  // namespace rspbc
