#include "rspbc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace rspbc {

namespace {

void require_strongly_connected(const Graph& g) {
  if (check_strong_connectivity(g).count != 1) {
    throw ValidationError("not-strongly-connected",
                          "this measure requires a strongly connected graph");
  }
}

void require_nonnegative_costs(const Graph& g) {
  for (const Arc& a : g.arcs()) {
    if (a.cost < 0.0) {
      throw ValidationError("negative-cost",
                            "shortest-path measures require costs >= 0");
    }
  }
}

// Shortest-path tie tolerance; pinned so golden outputs stay stable.
bool on_shortest_path(double dist_u, double cost, double dist_v) {
  return dist_u + cost <= dist_v * (1.0 + 1e-9) + 1e-12;
}

}  // namespace

ShortestPathDag shortest_path_dag(const Graph& g, int source) {
  const int n = g.node_count();
  ShortestPathDag dag;
  dag.source = source;
  dag.distances =
      Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  dag.distances[source] = 0.0;
  dag.dag_predecessors.assign(static_cast<size_t>(n), {});
  dag.dag_successors.assign(static_cast<size_t>(n), {});

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::vector<bool> settled(static_cast<size_t>(n), false);
  queue.push({0.0, source});
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (settled[static_cast<size_t>(v)]) continue;
    settled[static_cast<size_t>(v)] = true;
    dag.settle_order.push_back(v);
    for (int k : g.out_arcs(v)) {
      const Arc& a = g.arc(k);
      if (d + a.cost < dag.distances[a.dst]) {
        dag.distances[a.dst] = d + a.cost;
        queue.push({dag.distances[a.dst], a.dst});
      }
    }
  }
  for (const Arc& a : g.arcs()) {
    if (!settled[static_cast<size_t>(a.src)] ||
        !settled[static_cast<size_t>(a.dst)]) {
      continue;
    }
    if (on_shortest_path(dag.distances[a.src], a.cost, dag.distances[a.dst])) {
      dag.dag_arcs.emplace_back(a.src, a.dst);
      dag.dag_predecessors[static_cast<size_t>(a.dst)].push_back(a.src);
      dag.dag_successors[static_cast<size_t>(a.src)].push_back(a.dst);
    }
  }
  return dag;
}

CentralityVector shortest_path_betweenness(const Graph& g) {
  require_strongly_connected(g);
  require_nonnegative_costs(g);
  const int n = g.node_count();
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  std::vector<double> sigma(static_cast<size_t>(n));
  std::vector<double> delta(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    const ShortestPathDag dag = shortest_path_dag(g, s);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    sigma[static_cast<size_t>(s)] = 1.0;
    for (int v : dag.settle_order) {
      for (int u : dag.dag_predecessors[static_cast<size_t>(v)]) {
        sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
      }
    }
    // Brandes accumulation over interior nodes; endpoints are handled by
    // the closed-form 2(n-1) correction below.
    for (auto it = dag.settle_order.rbegin(); it != dag.settle_order.rend();
         ++it) {
      const int v = *it;
      for (int u : dag.dag_predecessors[static_cast<size_t>(v)]) {
        delta[static_cast<size_t>(u)] +=
            sigma[static_cast<size_t>(u)] / sigma[static_cast<size_t>(v)] *
            (1.0 + delta[static_cast<size_t>(v)]);
      }
      if (v != s) scores[v] += delta[static_cast<size_t>(v)];
    }
  }
  scores.array() += 2.0 * static_cast<double>(n - 1);
  return make_centrality(std::move(scores), "sp");
}

CentralityVector shortest_path_likelihood_betweenness(
    const Graph& g, TransitionPolicy policy) {
  require_strongly_connected(g);
  require_nonnegative_costs(g);
  const TransitionModel model = reference_transitions(g, policy);
  const int n = g.node_count();
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  std::vector<double> forward(static_cast<size_t>(n));
  std::vector<double> delta(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    const ShortestPathDag dag = shortest_path_dag(g, s);
    // forward[v]: total reference likelihood of shortest s->v paths.
    std::fill(forward.begin(), forward.end(), 0.0);
    forward[static_cast<size_t>(s)] = 1.0;
    for (int v : dag.settle_order) {
      for (int u : dag.dag_predecessors[static_cast<size_t>(v)]) {
        forward[static_cast<size_t>(v)] +=
            forward[static_cast<size_t>(u)] * model.p_ref(u, v);
      }
    }
    // delta[v] = sum over targets t of B_t(v)/F(t), accumulated backwards:
    // delta[v] = 1/F(v) + sum_{(v,w) in dag} p_vw delta[w]. The node's
    // contribution over all pairs from s is F(v) delta[v]; the 1/F(v) seed
    // covers v itself as target. Subtracting 1 at v = s removes the
    // spurious (s,s) pair.
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = dag.settle_order.rbegin(); it != dag.settle_order.rend();
         ++it) {
      const int v = *it;
      delta[static_cast<size_t>(v)] = 1.0 / forward[static_cast<size_t>(v)];
      for (int w : dag.dag_successors[static_cast<size_t>(v)]) {
        delta[static_cast<size_t>(v)] +=
            model.p_ref(v, w) * delta[static_cast<size_t>(w)];
      }
    }
    for (int v : dag.settle_order) {
      scores[v] += forward[static_cast<size_t>(v)] *
                   delta[static_cast<size_t>(v)];
    }
    scores[s] -= 1.0;
  }
  return make_centrality(std::move(scores),
                         "sp-likelihood(policy=" + to_string(policy) + ")");
}

Eigen::VectorXd stationary_distribution(const TransitionModel& t) {
  const auto n = t.p_ref.rows();
  // Solve (P^T - I) pi = 0 with one row replaced by the normalization
  // sum(pi) = 1. Valid periodic chains included: the fixed vector exists
  // and is unique for irreducible chains even when powers oscillate.
  Eigen::MatrixXd system = t.p_ref.transpose() - Eigen::MatrixXd::Identity(n, n);
  system.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs[n - 1] = 1.0;
  // Full pivoting: reducible chains leave the replaced system rank
  // deficient, and a consistent singular solve must not slip through.
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible()) {
    throw ValidationError("not-strongly-connected",
                          "stationary distribution is not unique; the chain "
                          "is not irreducible");
  }
  Eigen::VectorXd pi = lu.solve(rhs);
  const double residual =
      (t.p_ref.transpose() * pi - pi).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10)) {
    throw NumericalError("stationary-residual",
                         "stationary distribution residual " +
                             std::to_string(residual) + " exceeds 1e-10");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (pi[i] < 0.0) {
      if (pi[i] < -1e-12) {
        throw NumericalError("stationary-negative",
                             "stationary distribution went negative");
      }
      pi[i] = 0.0;
    }
  }
  pi /= pi.sum();
  return pi;
}

double summed_hitting_times(const TransitionModel& t) {
  const auto n = t.p_ref.rows();
  double total = 0.0;
  Eigen::MatrixXd q(n - 1, n - 1);
  for (Eigen::Index target = 0; target < n; ++target) {
    // Absorbing-chain solve with row/column `target` deleted:
    // (I - Q) h = 1 gives expected steps to absorption per start node.
    for (Eigen::Index i = 0, qi = 0; i < n; ++i) {
      if (i == target) continue;
      for (Eigen::Index j = 0, qj = 0; j < n; ++j) {
        if (j == target) continue;
        q(qi, qj) = t.p_ref(i, j);
        ++qj;
      }
      ++qi;
    }
    const Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(n - 1, n - 1) - q;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    if (lu.rcond() < 1e-14) {
      throw NumericalError("singular-system",
                           "absorbing system is singular; hitting times are "
                           "undefined (is the graph strongly connected?)");
    }
    const Eigen::VectorXd hits = lu.solve(Eigen::VectorXd::Ones(n - 1));
    total += hits.sum();
  }
  return total;
}

CentralityVector current_flow_betweenness(const Graph& g) {
  if (!g.declared_undirected()) {
    throw ValidationError("undirected-required",
                          "current flow betweenness is defined on undirected "
                          "graphs only");
  }
  if (check_strong_connectivity(g).count != 1) {
    throw ValidationError("disconnected-input",
                          "current flow betweenness requires a connected "
                          "graph");
  }
  const int n = g.node_count();
  // Weighted Laplacian with arc weights as conductances.
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  for (const Arc& a : g.arcs()) {
    laplacian(a.src, a.dst) -= a.weight;
    laplacian(a.src, a.src) += a.weight;
  }
  // Pseudoinverse via the rank-one shift: (L + J/n)^-1 = L+ + J/n.
  const Eigen::MatrixXd shifted =
      laplacian + Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
  if (lu.rcond() < 1e-14) {
    throw NumericalError("singular-system",
                         "Laplacian system is numerically singular");
  }
  const Eigen::MatrixXd lplus =
      lu.inverse() - Eigen::MatrixXd::Constant(n, n, 1.0 / n);

  // Current through edge {i,j} for the ordered pair (s,t) is
  // a_ij (d_s - d_t) with d_v = L+_iv - L+_jv. Summing |d_s - d_t| over all
  // ordered pairs reduces to a sorted scan per edge.
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n);
  std::vector<double> d(static_cast<size_t>(n));
  for (const auto& [i, j] : g.undirected_edges()) {
    const double a = g.arc(g.arc_index(i, j)).weight;
    for (int v = 0; v < n; ++v) d[static_cast<size_t>(v)] = lplus(i, v) - lplus(j, v);
    std::sort(d.begin(), d.end());
    double pair_sum = 0.0;
    for (int k = 0; k < n; ++k) {
      pair_sum += d[static_cast<size_t>(k)] * (2.0 * k - n + 1.0);
    }
    const double through = 2.0 * a * pair_sum;  // ordered pairs, both ways
    scores[i] += through;
    scores[j] += through;
  }
  return make_centrality(std::move(scores), "current-flow");
}

CentralityVector degree_limit_scores(const Graph& g, TransitionPolicy policy) {
  require_strongly_connected(g);
  const TransitionModel model = reference_transitions(g, policy);
  const double h = summed_hitting_times(model);
  Eigen::VectorXd scores = stationary_distribution(model) * h;
  return make_centrality(std::move(scores),
                         "degree-limit(policy=" + to_string(policy) + ")");
}

}  // namespace rspbc
