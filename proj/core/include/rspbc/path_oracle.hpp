#ifndef RSPBC_PATH_ORACLE_HPP
#define RSPBC_PATH_ORACLE_HPP

#include <cstdint>
#include <span>

#include "rspbc/centrality.hpp"
#include "rspbc/graph.hpp"
#include "rspbc/transition.hpp"

namespace rspbc {

// Exhaustive enumeration of absorbing s-t paths up to a length cap.
// Deliberately matrix-free: this module is the independent check on the
// closed-form algebra and never touches an inverse.
struct PathEnsemble {
  int source = 0;
  int target = 0;
  int length_cap = 0;  // maximum number of edges per path
  TransitionPolicy policy = TransitionPolicy::kWeightProportional;

  // Paths stored flattened; path k is nodes[offsets[k] .. offsets[k+1]).
  std::vector<int32_t> nodes;
  std::vector<size_t> offsets;  // size path_count() + 1
  std::vector<double> costs;
  std::vector<double> likelihoods;

  size_t path_count() const { return costs.size(); }
  std::span<const int32_t> path(size_t k) const {
    return {nodes.data() + offsets[k], offsets[k + 1] - offsets[k]};
  }
};

struct OracleOptions {
  size_t path_budget = 10'000'000;  // hard cap on enumerated paths
};

// Depth-first enumeration; the target never appears as an intermediate
// node, every other node may repeat freely within the cap. Throws
// ValidationError("path-budget-exceeded") when the ensemble outgrows the
// budget.
PathEnsemble enumerate_paths(const Graph& g, TransitionPolicy policy, int s,
                             int t, int cap, const OracleOptions& options = {});

// Truncated direct sums of the Boltzmann path statistics.
struct OracleQuantities {
  double partition_estimate = 0.0;
  // Expected visits normalized by the partition estimate. The target row is
  // zero under the visit convention used by the closed forms; the
  // `with_terminal` variant counts the final arrival as one visit.
  Eigen::VectorXd node_visit_estimates;
  Eigen::VectorXd node_visit_estimates_with_terminal;
  Eigen::VectorXd edge_flow_estimates;  // aligned with Graph::arcs()
  double last_increment = 0.0;  // partition mass of the longest length slice
};

// Throws ValidationError("unreachable-within-cap") on an empty ensemble.
// Asserts the tail bound: the final length slice can carry at most
// rho_hat^cap of mass, where rho_hat is the max row sum of the killed walk.
OracleQuantities oracle_rsp_quantities(const Graph& g, const PathEnsemble& e,
                                       double beta);

// The same truncated sums evaluated by a length-indexed forward/backward
// recursion over walk weights instead of materialized paths. Produces
// bit-for-bit the sums the enumeration route defines (every absorbing path
// of at most `cap` edges contributes its Boltzmann weight once), but stays
// feasible on graphs whose path counts explode. Still inversion-free.
OracleQuantities truncated_rsp_sums(const Graph& g, TransitionPolicy policy,
                                    int s, int t, int cap, double beta);

}  // namespace rspbc

#endif
