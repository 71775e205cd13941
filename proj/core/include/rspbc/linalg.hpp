#ifndef RSPBC_LINALG_HPP
#define RSPBC_LINALG_HPP

#include <Eigen/Dense>

#include "rspbc/graph.hpp"
#include "rspbc/transition.hpp"

namespace rspbc {

// Refuse beta * max(cost) beyond this; exp() underflows into subnormals
// shortly after and the resulting Z ratios degrade undetectably.
inline constexpr double kBetaCostGuard = 700.0;

// Smallest fundamental-matrix entry accepted as a genuinely positive walk
// weight; anything below is treated as an underflow-disconnected pair.
inline constexpr double kZPositiveFloor = 1e-305;

// W = P_ref o exp(-beta * C), the substochastic transition structure of the
// killed walk. Entries are exactly zero where no arc exists.
struct KilledWalkMatrix {
  Eigen::MatrixXd w;
  double beta = 1.0;
};

KilledWalkMatrix killed_transition_matrix(const Graph& g,
                                          const TransitionModel& t,
                                          double beta);

// Z = (I - W)^-1 together with the diagnostics callers need to trust it.
// One factorization is done per beta and the full inverse is materialized;
// the batch formulas downstream consume whole rows and columns.
struct FundamentalSolve {
  Eigen::MatrixXd z;
  double reciprocal_condition_estimate = 0.0;
  double beta = 1.0;
  double residual = 0.0;  // max-abs of (I - W) Z - I
};

// Throws NumericalError("singular-system") when the residual exceeds 1e-6
// or the condition estimate drops below 1e-14 (beta too small for a
// cost-free cycle, or disconnected input).
FundamentalSolve fundamental_matrix(const KilledWalkMatrix& w);

// Z_st = z_st / z_tt, the total Boltzmann weight of absorbing s-t paths.
// Rejects s == t; returns 0 when t is unreachable from s.
double pair_partition_function(const FundamentalSolve& f, int s, int t);

// For strongly connected graphs every entry of Z must be a positive normal
// number; throws NumericalError("killed-walk-disconnected") otherwise.
void require_positive_fundamental(const FundamentalSolve& f);

}  // namespace rspbc

#endif
