#ifndef RSPBC_TRANSITION_HPP
#define RSPBC_TRANSITION_HPP

#include <Eigen/Dense>
#include <string>

#include "rspbc/graph.hpp"

namespace rspbc {

enum class TransitionPolicy {
  kWeightProportional,  // p_ij = a_ij / sum_k a_ik
  kDegreeUniform,       // p_ij = 1 / outdeg(i)
};

std::string to_string(TransitionPolicy p);
TransitionPolicy transition_policy_from_string(const std::string& s);

// Row-stochastic reference transition structure of the unbiased walk.
struct TransitionModel {
  Eigen::MatrixXd p_ref;  // n x n, p_ref(i,j) > 0 iff arc (i,j) exists
  TransitionPolicy policy = TransitionPolicy::kWeightProportional;
};

// Throws ValidationError("dangling-node") when some node has outdegree 0.
TransitionModel reference_transitions(const Graph& g, TransitionPolicy policy);

// Probability of arc k under the policy, without materializing the matrix.
double arc_transition_probability(const Graph& g, TransitionPolicy policy,
                                  int arc_index);

}  // namespace rspbc

#endif
