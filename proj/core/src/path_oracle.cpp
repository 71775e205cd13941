#include "rspbc/path_oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace rspbc {

namespace {

struct DfsState {
  const Graph* g = nullptr;
  TransitionPolicy policy = TransitionPolicy::kWeightProportional;
  int target = 0;
  int cap = 0;
  size_t budget = 0;
  std::vector<int32_t> prefix;
  double cost = 0.0;
  double likelihood = 1.0;
  PathEnsemble* out = nullptr;
};

void record_path(DfsState& st) {
  if (st.out->path_count() >= st.budget) {
    throw ValidationError(
        "path-budget-exceeded",
        "path enumeration exceeded the budget of " +
            std::to_string(st.budget) +
            " paths; lower the cap or raise the budget");
  }
  st.out->nodes.insert(st.out->nodes.end(), st.prefix.begin(),
                       st.prefix.end());
  st.out->offsets.push_back(st.out->nodes.size());
  st.out->costs.push_back(st.cost);
  st.out->likelihoods.push_back(st.likelihood);
}

void dfs(DfsState& st, int node, int depth) {
  for (int k : st.g->out_arcs(node)) {
    const Arc& a = st.g->arc(k);
    const double p = arc_transition_probability(*st.g, st.policy, k);
    st.prefix.push_back(static_cast<int32_t>(a.dst));
    st.cost += a.cost;
    st.likelihood *= p;
    if (a.dst == st.target) {
      record_path(st);
    } else if (depth + 1 < st.cap) {
      dfs(st, a.dst, depth + 1);
    }
    st.likelihood /= p;
    st.cost -= a.cost;
    st.prefix.pop_back();
  }
}

}  // namespace

PathEnsemble enumerate_paths(const Graph& g, TransitionPolicy policy, int s,
                             int t, int cap, const OracleOptions& options) {
  if (s == t) {
    throw ValidationError("identical-pair", "path enumeration requires s != t");
  }
  if (cap < 1) {
    throw ValidationError("invalid-cap", "length cap must be >= 1");
  }
  PathEnsemble ensemble;
  ensemble.source = s;
  ensemble.target = t;
  ensemble.length_cap = cap;
  ensemble.policy = policy;
  ensemble.offsets.push_back(0);

  DfsState st;
  st.g = &g;
  st.policy = policy;
  st.target = t;
  st.cap = cap;
  st.budget = options.path_budget;
  st.prefix.push_back(static_cast<int32_t>(s));
  st.out = &ensemble;
  dfs(st, s, 0);
  return ensemble;
}

OracleQuantities oracle_rsp_quantities(const Graph& g, const PathEnsemble& e,
                                       double beta) {
  if (e.path_count() == 0) {
    throw ValidationError("unreachable-within-cap",
                          "no absorbing path reaches the target within the "
                          "length cap");
  }
  const int n = g.node_count();
  OracleQuantities q;
  q.node_visit_estimates = Eigen::VectorXd::Zero(n);
  q.edge_flow_estimates = Eigen::VectorXd::Zero(g.arc_count());
  std::vector<double> mass_by_length(static_cast<size_t>(e.length_cap) + 1,
                                     0.0);

  for (size_t k = 0; k < e.path_count(); ++k) {
    const auto path = e.path(k);
    const double w = e.likelihoods[k] * std::exp(-beta * e.costs[k]);
    q.partition_estimate += w;
    mass_by_length[path.size() - 1] += w;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      q.node_visit_estimates[path[i]] += w;
      q.edge_flow_estimates[g.arc_index(path[i], path[i + 1])] += w;
    }
  }
  q.node_visit_estimates /= q.partition_estimate;
  q.edge_flow_estimates /= q.partition_estimate;
  q.node_visit_estimates_with_terminal = q.node_visit_estimates;
  q.node_visit_estimates_with_terminal[e.target] += 1.0;
  q.last_increment = mass_by_length[static_cast<size_t>(e.length_cap)];

  // Tail sanity: the mass of the length-L slice cannot exceed rho_hat^L for
  // rho_hat the max row sum of the killed walk, computed arc-wise here to
  // stay independent of the dense solver.
  std::vector<double> row_sum(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < g.arc_count(); ++k) {
    const Arc& a = g.arc(k);
    row_sum[static_cast<size_t>(a.src)] +=
        arc_transition_probability(g, e.policy, k) * std::exp(-beta * a.cost);
  }
  double rho_hat = 0.0;
  for (double r : row_sum) rho_hat = std::max(rho_hat, r);
  const double bound =
      std::pow(rho_hat, static_cast<double>(e.length_cap)) * (1.0 + 1e-9) +
      1e-300;
  if (q.last_increment > bound) {
    throw NumericalError("oracle-tail-bound-violated",
                         "length-slice mass " +
                             std::to_string(q.last_increment) +
                             " exceeds the substochastic bound " +
                             std::to_string(bound));
  }
  return q;
}

OracleQuantities truncated_rsp_sums(const Graph& g, TransitionPolicy policy,
                                    int s, int t, int cap, double beta) {
  if (s == t) {
    throw ValidationError("identical-pair", "truncated sums require s != t");
  }
  if (cap < 1) {
    throw ValidationError("invalid-cap", "length cap must be >= 1");
  }
  const int n = g.node_count();
  const int m = g.arc_count();

  // Arc weights of the killed walk, assembled arc-wise.
  std::vector<double> w(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    w[static_cast<size_t>(k)] = arc_transition_probability(g, policy, k) *
                                std::exp(-beta * g.arc(k).cost);
  }

  // forward[a][v]: weight of length-a walks s -> v that avoid t throughout;
  // backward_prefix[b][u]: weight of walks u -> t of length 1..b with t
  // only terminal. Both live on the t-avoiding sub-walk.
  std::vector<Eigen::VectorXd> forward(static_cast<size_t>(cap));
  forward[0] = Eigen::VectorXd::Zero(n);
  forward[0][s] = 1.0;
  for (int a = 1; a < cap; ++a) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(n);
    const Eigen::VectorXd& prev = forward[static_cast<size_t>(a - 1)];
    for (int k = 0; k < m; ++k) {
      const Arc& arc = g.arc(k);
      if (arc.src == t || arc.dst == t) continue;
      next[arc.dst] += prev[arc.src] * w[static_cast<size_t>(k)];
    }
    forward[static_cast<size_t>(a)] = std::move(next);
  }

  std::vector<Eigen::VectorXd> tail(static_cast<size_t>(cap) + 1);
  tail[0] = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd g_step = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < m; ++k) {
    const Arc& arc = g.arc(k);
    if (arc.dst == t && arc.src != t) {
      g_step[arc.src] += w[static_cast<size_t>(k)];
    }
  }
  tail[1] = g_step;
  for (int b = 2; b <= cap; ++b) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < m; ++k) {
      const Arc& arc = g.arc(k);
      if (arc.src == t || arc.dst == t) continue;
      next[arc.src] += w[static_cast<size_t>(k)] * g_step[arc.dst];
    }
    g_step = std::move(next);
    tail[static_cast<size_t>(b)] = tail[static_cast<size_t>(b - 1)] + g_step;
  }

  OracleQuantities q;
  q.node_visit_estimates = Eigen::VectorXd::Zero(n);
  q.edge_flow_estimates = Eigen::VectorXd::Zero(m);

  // Partition: forward mass absorbed exactly at step a+1.
  double previous_partition = 0.0;
  for (int a = 0; a < cap; ++a) {
    double absorbed = 0.0;
    for (int k = 0; k < m; ++k) {
      const Arc& arc = g.arc(k);
      if (arc.dst == t && arc.src != t) {
        absorbed += forward[static_cast<size_t>(a)][arc.src] *
                    w[static_cast<size_t>(k)];
      }
    }
    if (a == cap - 1) previous_partition = q.partition_estimate;
    q.partition_estimate += absorbed;
  }
  q.last_increment = q.partition_estimate - previous_partition;
  if (q.partition_estimate <= 0.0) {
    throw ValidationError("unreachable-within-cap",
                          "no absorbing path reaches the target within the "
                          "length cap");
  }

  // Visits: occurrence of node i at position a, completed within the cap.
  for (int a = 0; a < cap; ++a) {
    const Eigen::VectorXd& f = forward[static_cast<size_t>(a)];
    const Eigen::VectorXd& rest = tail[static_cast<size_t>(cap - a)];
    q.node_visit_estimates.noalias() += f.cwiseProduct(rest);
  }
  // Edge passages: arc taken as step a -> a+1, then completed.
  for (int k = 0; k < m; ++k) {
    const Arc& arc = g.arc(k);
    if (arc.src == t) continue;
    double total = 0.0;
    if (arc.dst == t) {
      for (int a = 0; a < cap; ++a) {
        total += forward[static_cast<size_t>(a)][arc.src];
      }
    } else {
      for (int a = 0; a + 1 < cap; ++a) {
        total += forward[static_cast<size_t>(a)][arc.src] *
                 tail[static_cast<size_t>(cap - a - 1)][arc.dst];
      }
    }
    q.edge_flow_estimates[k] = total * w[static_cast<size_t>(k)];
  }

  q.node_visit_estimates /= q.partition_estimate;
  q.edge_flow_estimates /= q.partition_estimate;
  q.node_visit_estimates_with_terminal = q.node_visit_estimates;
  q.node_visit_estimates_with_terminal[t] += 1.0;
  return q;
}

}  // namespace rspbc
