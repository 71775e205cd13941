#ifndef RSPBC_TESTS_FIXTURES_HPP
#define RSPBC_TESTS_FIXTURES_HPP

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here recomputes expectations from first principles (series
// summation, exhaustive path search, per-pair solves) so the library code
// under test never certifies itself.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "rspbc/graph.hpp"
#include "rspbc/transition.hpp"

namespace rspbc::testing {

inline std::string label_of(int i) { return std::to_string(i + 1); }

// Directed two-cycle: arcs 1->2 and 2->1, unit weight and cost.
inline Graph two_cycle() {
  GraphBuilder b(false);
  b.add_edge("1", "2", 1.0, 1.0);
  b.add_edge("2", "1", 1.0, 1.0);
  return b.build();
}

// Undirected graph from an explicit edge list of (u, v, weight, cost) with
// 0-based ids.
inline Graph undirected_from(
    int n, const std::vector<std::tuple<int, int, double, double>>& edges) {
  GraphBuilder b(true);
  for (int i = 0; i < n; ++i) b.ensure_node(label_of(i));
  for (const auto& [u, v, w, c] : edges) {
    b.add_edge(label_of(u), label_of(v), w, c);
  }
  return b.build();
}

inline Graph directed_from(
    int n, const std::vector<std::tuple<int, int, double, double>>& edges) {
  GraphBuilder b(false);
  for (int i = 0; i < n; ++i) b.ensure_node(label_of(i));
  for (const auto& [u, v, w, c] : edges) {
    b.add_edge(label_of(u), label_of(v), w, c);
  }
  return b.build();
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Seeded connected undirected graph: random spanning tree plus `extra`
// random non-duplicate edges. Unit weights/costs unless randomized.
inline Graph random_connected_graph(int n, int extra, uint64_t seed,
                                    bool random_weights = false,
                                    bool integer_costs = false,
                                    int max_cost = 5) {
  std::mt19937_64 rng(seed);
  GraphBuilder b(true);
  for (int i = 0; i < n; ++i) b.ensure_node(label_of(i));
  std::vector<std::pair<int, int>> present;
  auto has = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return std::find(present.begin(), present.end(), std::make_pair(u, v)) !=
           present.end();
  };
  auto add = [&](int u, int v) {
    const double w = random_weights ? 0.5 + 1.5 * uniform01(rng) : 1.0;
    const double c =
        integer_costs
            ? 1.0 + std::floor(uniform01(rng) * static_cast<double>(max_cost))
            : 1.0;
    b.add_edge(label_of(u), label_of(v), w, std::min<double>(c, max_cost));
    if (u > v) std::swap(u, v);
    present.emplace_back(u, v);
  };
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(uniform01(rng) * v);
    add(u, v);
  }
  int added = 0;
  int guard = 0;
  while (added < extra && ++guard < 100 * (extra + 1)) {
    const int u = static_cast<int>(uniform01(rng) * n);
    const int v = static_cast<int>(uniform01(rng) * n);
    if (u == v || has(u, v)) continue;
    add(u, v);
    ++added;
  }
  return b.build();
}

// Truncated Neumann series sum_{k<=terms} W^k; the series oracle for the
// fundamental matrix.
inline Eigen::MatrixXd neumann_series(const Eigen::MatrixXd& w, int terms) {
  const auto n = w.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= terms; ++k) {
    power = power * w;
    sum += power;
  }
  return sum;
}

// Expected visits of the unbiased walk from `s` before absorption at `t`,
// via the absorbing-chain fundamental matrix over the non-target nodes.
inline Eigen::VectorXd absorbing_chain_visits(const TransitionModel& model,
                                              int s, int t) {
  const auto n = model.p_ref.rows();
  Eigen::MatrixXd q(n - 1, n - 1);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i != t) keep.push_back(i);
  }
  for (size_t a = 0; a < keep.size(); ++a) {
    for (size_t c = 0; c < keep.size(); ++c) {
      q(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) =
          model.p_ref(keep[a], keep[c]);
    }
  }
  const Eigen::MatrixXd fundamental =
      (Eigen::MatrixXd::Identity(n - 1, n - 1) - q).inverse();
  Eigen::VectorXd visits = Eigen::VectorXd::Zero(n);
  size_t s_row = 0;
  for (size_t a = 0; a < keep.size(); ++a) {
    if (keep[a] == s) s_row = a;
  }
  for (size_t c = 0; c < keep.size(); ++c) {
    visits[keep[c]] = fundamental(static_cast<Eigen::Index>(s_row),
                                  static_cast<Eigen::Index>(c));
  }
  return visits;
}

// All simple shortest paths between two nodes by exhaustive search; the
// brute oracle for the likelihood betweenness on tiny graphs.
struct BruteShortest {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> paths;
};

inline void brute_paths_rec(const Graph& g, int node, int t,
                            std::vector<int>& prefix, std::vector<bool>& used,
                            double cost, BruteShortest& out) {
  if (node == t) {
    if (cost < out.cost - 1e-12) {
      out.cost = cost;
      out.paths.clear();
      out.paths.push_back(prefix);
    } else if (cost <= out.cost + 1e-12) {
      out.paths.push_back(prefix);
    }
    return;
  }
  for (int k : g.out_arcs(node)) {
    const Arc& a = g.arc(k);
    if (used[static_cast<size_t>(a.dst)]) continue;
    used[static_cast<size_t>(a.dst)] = true;
    prefix.push_back(a.dst);
    brute_paths_rec(g, a.dst, t, prefix, used, cost + a.cost, out);
    prefix.pop_back();
    used[static_cast<size_t>(a.dst)] = false;
  }
}

inline BruteShortest brute_shortest_paths(const Graph& g, int s, int t) {
  BruteShortest out;
  std::vector<int> prefix{s};
  std::vector<bool> used(static_cast<size_t>(g.node_count()), false);
  used[static_cast<size_t>(s)] = true;
  brute_paths_rec(g, s, t, prefix, used, 0.0, out);
  return out;
}

// Brute-force shortest path likelihood betweenness over ordered pairs with
// the endpoint convention (all nodes on a shortest path count, both ends
// included).
inline Eigen::VectorXd brute_likelihood_betweenness(const Graph& g,
                                                    TransitionPolicy policy) {
  const TransitionModel model = reference_transitions(g, policy);
  const int n = g.node_count();
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const BruteShortest bs = brute_shortest_paths(g, s, t);
      double total = 0.0;
      std::vector<double> likelihoods;
      for (const auto& path : bs.paths) {
        double lik = 1.0;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          lik *= model.p_ref(path[i], path[i + 1]);
        }
        likelihoods.push_back(lik);
        total += lik;
      }
      for (size_t p = 0; p < bs.paths.size(); ++p) {
        for (int node : bs.paths[p]) scores[node] += likelihoods[p] / total;
      }
    }
  }
  return scores;
}

// Same structure with equal path shares: Freeman betweenness, endpoints
// included.
inline Eigen::VectorXd brute_fraction_betweenness(const Graph& g) {
  const int n = g.node_count();
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const BruteShortest bs = brute_shortest_paths(g, s, t);
      const double share = 1.0 / static_cast<double>(bs.paths.size());
      for (const auto& path : bs.paths) {
        for (int node : path) scores[node] += share;
      }
    }
  }
  return scores;
}

// Per-pair Laplacian solves: the correctness oracle for the one-pass
// current flow implementation.
inline Eigen::VectorXd brute_current_flow(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  for (const Arc& a : g.arcs()) {
    laplacian(a.src, a.dst) -= a.weight;
    laplacian(a.src, a.src) += a.weight;
  }
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  const Eigen::MatrixXd shifted =
      laplacian + Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
      rhs[s] = 1.0;
      rhs[t] = -1.0;
      const Eigen::VectorXd potential = lu.solve(rhs);
      for (const auto& [i, j] : g.undirected_edges()) {
        const double a = g.arc(g.arc_index(i, j)).weight;
        const double cur = a * (potential[i] - potential[j]);
        scores[i] += std::abs(cur);
        scores[j] += std::abs(cur);
      }
    }
  }
  return scores;
}

}  // namespace rspbc::testing

#endif
