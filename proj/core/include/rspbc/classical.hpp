#ifndef RSPBC_CLASSICAL_HPP
#define RSPBC_CLASSICAL_HPP

#include <utility>
#include <vector>

#include "rspbc/centrality.hpp"
#include "rspbc/graph.hpp"
#include "rspbc/transition.hpp"

namespace rspbc {

// Cost-minimal distances from one source, together with the arcs that lie
// on some shortest path (dist(u) + c_uv == dist(v) within the tie
// tolerance). `settle_order` lists nodes by nondecreasing distance.
struct ShortestPathDag {
  int source = 0;
  Eigen::VectorXd distances;
  std::vector<std::pair<int, int>> dag_arcs;
  std::vector<std::vector<int>> dag_predecessors;  // per node, dag arcs in
  std::vector<std::vector<int>> dag_successors;    // per node, dag arcs out
  std::vector<int> settle_order;
};

ShortestPathDag shortest_path_dag(const Graph& g, int source);

// Freeman betweenness over ordered pairs, endpoints included: every node on
// a shortest path (both ends too) receives that path's 1/|P*| share.
CentralityVector shortest_path_betweenness(const Graph& g);

// Replaces the 1/|P*| share with the normalized reference-walk likelihood
// of the path. Equal to shortest_path_betweenness whenever shortest paths
// are unique.
CentralityVector shortest_path_likelihood_betweenness(const Graph& g,
                                                      TransitionPolicy policy);

// Unique fixed vector of (P_ref)^T for a strongly connected graph.
Eigen::VectorXd stationary_distribution(const TransitionModel& t);

// Sum over ordered pairs of average hitting times of the unbiased walk.
double summed_hitting_times(const TransitionModel& t);

// Electrical throughput over ordered source-sink pairs with each undirected
// edge crediting both endpoints; computed in one pass from the Laplacian
// pseudoinverse. Requires an undirected connected graph.
CentralityVector current_flow_betweenness(const Graph& g);

// Stationary distribution scaled by the summed hitting times; the shape of
// the simple RSP betweenness as beta vanishes.
CentralityVector degree_limit_scores(const Graph& g, TransitionPolicy policy);

}  // namespace rspbc

#endif
