#ifndef RSPBC_RSP_NET_HPP
#define RSPBC_RSP_NET_HPP

#include "rspbc/centrality.hpp"
#include "rspbc/linalg.hpp"

namespace rspbc {

struct EdgeNetFlow {
  int src = 0;
  int dst = 0;
  double net_flow = 0.0;  // sum_{s,t} |eta_ij(s,t) - eta_ji(s,t)|
};

// The pair matrix N^{ij}: entry (s,t) is eta_ij(s,t), assembled from column
// i and row j of Z as
//   N^{ij} = w_ij ( z_i^c (z_j^r)^T / Z - e (z_i^c o z_j^r / diag Z)^T ).
// Diagonal entries are exactly zero; entries of unreachable pairs are zero.
// Requires the arc (i,j) to exist.
Eigen::MatrixXd pair_flow_matrix(const Graph& g, const FundamentalSolve& f,
                                 const KilledWalkMatrix& w, int i, int j);

// Net flow through the edge: the absolute value is taken per ordered (s,t)
// pair before summation. A missing opposite arc contributes a zero matrix;
// requires at least one of (i,j), (j,i) to exist.
EdgeNetFlow edge_net_flow(const Graph& g, const FundamentalSolve& f,
                          const KilledWalkMatrix& w, int i, int j);

// RSP net betweenness: per-node sums of edge net flows. Undirected graphs
// process each edge once and credit both endpoints; directed graphs are
// accepted with a warning annotation. `threads` parallelizes the edge loop
// deterministically for a fixed thread count.
CentralityVector rsp_net_betweenness(const Graph& g, TransitionPolicy policy,
                                     double beta, int threads = 1);

}  // namespace rspbc

#endif
