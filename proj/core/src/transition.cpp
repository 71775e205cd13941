#include "rspbc/transition.hpp"

namespace rspbc {

std::string to_string(TransitionPolicy p) {
  return p == TransitionPolicy::kWeightProportional ? "weight" : "degree";
}

TransitionPolicy transition_policy_from_string(const std::string& s) {
  if (s == "weight") return TransitionPolicy::kWeightProportional;
  if (s == "degree") return TransitionPolicy::kDegreeUniform;
  throw ValidationError("unknown-transition-policy",
                        "unknown transition policy '" + s +
                            "' (expected weight|degree)");
}

TransitionModel reference_transitions(const Graph& g, TransitionPolicy policy) {
  const int n = g.node_count();
  TransitionModel model;
  model.policy = policy;
  model.p_ref = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (g.out_degree(i) == 0) {
      throw ValidationError("dangling-node",
                            "node '" + g.label(i) + "' has outdegree 0");
    }
    const double denom = policy == TransitionPolicy::kWeightProportional
                             ? g.out_strength(i)
                             : static_cast<double>(g.out_degree(i));
    for (int k : g.out_arcs(i)) {
      const Arc& a = g.arc(k);
      const double num = policy == TransitionPolicy::kWeightProportional
                             ? a.weight
                             : 1.0;
      model.p_ref(i, a.dst) = num / denom;
    }
  }
  return model;
}

double arc_transition_probability(const Graph& g, TransitionPolicy policy,
                                  int arc_index) {
  const Arc& a = g.arc(arc_index);
  if (policy == TransitionPolicy::kWeightProportional) {
    return a.weight / g.out_strength(a.src);
  }
  return 1.0 / static_cast<double>(g.out_degree(a.src));
}

}  // namespace rspbc
