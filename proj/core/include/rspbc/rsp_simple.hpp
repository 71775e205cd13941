#ifndef RSPBC_RSP_SIMPLE_HPP
#define RSPBC_RSP_SIMPLE_HPP

#include <span>

#include "rspbc/centrality.hpp"
#include "rspbc/linalg.hpp"

namespace rspbc {

// Expected edge passages and node visits of the randomized-shortest-path
// walk for one ordered source/target pair.
struct PairFlowField {
  int source = 0;
  int target = 0;
  Eigen::VectorXd edge_flows;   // aligned with Graph::arcs()
  Eigen::VectorXd node_visits;  // node_visits[target] == 0 by convention
};

// eta_ij(s,t) = (z_si/z_st - z_ti/z_tt) w_ij z_jt and
// n_i(s,t)   = (z_si/z_st - z_ti/z_tt) z_it.
// Requires s != t and t reachable from s (z_st > 0).
PairFlowField pair_edge_flows(const Graph& g, const FundamentalSolve& f,
                              const KilledWalkMatrix& w, int s, int t);

// Simple RSP betweenness: expected visits summed over all ordered pairs,
// computed with the all-pairs batch formula
//   bet = diag(Z (Z^div - n Diag(Z^div))^T Z).
// Requires a strongly connected graph and beta within the overflow guard.
CentralityVector rsp_betweenness(const Graph& g, TransitionPolicy policy,
                                 double beta);

// One vector per beta, each identical to an independent call.
std::vector<CentralityVector> rsp_betweenness_sweep(
    const Graph& g, TransitionPolicy policy, std::span<const double> betas);

}  // namespace rspbc

#endif
