#include "rspbc/rsp_net.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace rspbc {

namespace {

// Guarded entry-wise fill: handles z_st = 0 (unreachable pair contributes
// zero) so it is safe on graphs that are not strongly connected.
void fill_pair_flow_guarded(const FundamentalSolve& f, double w_ij, int i,
                            int j, Eigen::MatrixXd& out) {
  const Eigen::MatrixXd& z = f.z;
  const auto n = z.rows();
  if (w_ij == 0.0) {
    out.setZero(n, n);
    return;
  }
  out.resize(n, n);
  for (Eigen::Index t = 0; t < n; ++t) {
    const double zjt_over_ztt = z(j, t) / z(t, t);
    for (Eigen::Index s = 0; s < n; ++s) {
      const double zst = z(s, t);
      out(s, t) = zst > 0.0
                      ? w_ij * (z(s, i) * z(j, t) / zst - z(t, i) * zjt_over_ztt)
                      : 0.0;
    }
    out(t, t) = 0.0;
  }
}

// Vectorized fill for the batch loop; assumes every z entry is positive,
// which rsp_net_betweenness establishes up front.
void fill_pair_flow_fast(const FundamentalSolve& f, double w_ij, int i, int j,
                         Eigen::MatrixXd& out) {
  const Eigen::MatrixXd& z = f.z;
  const auto n = z.rows();
  if (w_ij == 0.0) {
    out.setZero(n, n);
    return;
  }
  out.resize(n, n);
  out.noalias() = z.col(i) * z.row(j);
  out.array() /= z.array();
  const Eigen::RowVectorXd correction =
      (z.col(i).transpose().array() * z.row(j).array() /
       z.diagonal().transpose().array())
          .matrix();
  out.rowwise() -= correction;
  out *= w_ij;
  out.diagonal().setZero();
}

void require_strongly_connected(const Graph& g) {
  if (check_strong_connectivity(g).count != 1) {
    throw ValidationError("not-strongly-connected",
                          "this measure requires a strongly connected graph");
  }
}

}  // namespace

Eigen::MatrixXd pair_flow_matrix(const Graph& g, const FundamentalSolve& f,
                                 const KilledWalkMatrix& w, int i, int j) {
  if (!g.has_arc(i, j)) {
    throw ValidationError("missing-arc", "no arc " + g.label(i) + " -> " +
                                             g.label(j));
  }
  Eigen::MatrixXd out;
  fill_pair_flow_guarded(f, w.w(i, j), i, j, out);
  return out;
}

EdgeNetFlow edge_net_flow(const Graph& g, const FundamentalSolve& f,
                          const KilledWalkMatrix& w, int i, int j) {
  const bool fwd = g.has_arc(i, j);
  const bool bwd = g.has_arc(j, i);
  if (!fwd && !bwd) {
    throw ValidationError("missing-arc",
                          "neither arc between " + g.label(i) + " and " +
                              g.label(j) + " exists");
  }
  if ((!fwd || w.w(i, j) == 0.0) && (!bwd || w.w(j, i) == 0.0)) {
    throw ValidationError("missing-arc",
                          "both transition weights between " + g.label(i) +
                              " and " + g.label(j) + " vanished");
  }
  Eigen::MatrixXd nij, nji;
  fill_pair_flow_guarded(f, fwd ? w.w(i, j) : 0.0, i, j, nij);
  fill_pair_flow_guarded(f, bwd ? w.w(j, i) : 0.0, j, i, nji);
  return EdgeNetFlow{i, j, (nij - nji).cwiseAbs().sum()};
}

CentralityVector rsp_net_betweenness(const Graph& g, TransitionPolicy policy,
                                     double beta, int threads) {
  require_strongly_connected(g);
  const TransitionModel model = reference_transitions(g, policy);
  const KilledWalkMatrix w = killed_transition_matrix(g, model, beta);
  const FundamentalSolve f = fundamental_matrix(w);
  require_positive_fundamental(f);

  const int n = g.node_count();
  const bool undirected = g.declared_undirected();

  // Undirected graphs visit each edge once and credit both endpoints;
  // directed graphs visit every arc and credit its tail.
  std::vector<std::pair<int, int>> items;
  if (undirected) {
    items = g.undirected_edges();
  } else {
    items.reserve(static_cast<size_t>(g.arc_count()));
    for (const Arc& a : g.arcs()) items.emplace_back(a.src, a.dst);
  }

  const int worker_count =
      std::max(1, std::min<int>(threads, static_cast<int>(items.size())));
  std::vector<Eigen::VectorXd> partials(static_cast<size_t>(worker_count),
                                        Eigen::VectorXd::Zero(n));

  auto run_block = [&](int worker, size_t begin, size_t end) {
    Eigen::MatrixXd nij, nji;  // scratch, reused across the block
    Eigen::VectorXd& acc = partials[static_cast<size_t>(worker)];
    for (size_t e = begin; e < end; ++e) {
      const auto [i, j] = items[e];
      fill_pair_flow_fast(f, w.w(i, j), i, j, nij);
      fill_pair_flow_fast(f, w.w(j, i), j, i, nji);
      const double net = (nij - nji).cwiseAbs().sum();
      acc[i] += net;
      if (undirected) acc[j] += net;
    }
  };

  if (worker_count == 1) {
    run_block(0, 0, items.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk =
        (items.size() + static_cast<size_t>(worker_count) - 1) /
        static_cast<size_t>(worker_count);
    for (int t = 0; t < worker_count; ++t) {
      const size_t begin =
          std::min(items.size(), chunk * static_cast<size_t>(t));
      const size_t end = std::min(items.size(), begin + chunk);
      pool.emplace_back(run_block, t, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  for (const auto& partial : partials) scores += partial;

  CentralityVector cv = make_centrality(
      std::move(scores), "rsp-net(beta=" + std::to_string(beta) +
                             ", policy=" + to_string(policy) + ")");
  if (!undirected) {
    cv.warning =
        "directed-net-flow: net flows on directed graphs lack the electrical "
        "interpretation; rankings remain well-defined";
  }
  return cv;
}

}  // namespace rspbc
