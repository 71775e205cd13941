#ifndef RSPBC_CENTRALITY_HPP
#define RSPBC_CENTRALITY_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rspbc/errors.hpp"

namespace rspbc {

// Per-node nonnegative scores plus the deterministic ranking derived from
// them: rank 1 is the highest score, ties broken by ascending node id.
struct CentralityVector {
  Eigen::VectorXd scores;
  std::vector<int> ranking;  // ranking[r-1] = node holding rank r
  std::string measure_tag;
  std::string warning;  // empty unless the measure attached a caveat

  // rank (1-based) of each node; inverse permutation of `ranking`.
  std::vector<int> rank_of_node() const;
};

// Validates finiteness/nonnegativity (tiny float noise below `clamp_floor`
// in magnitude is clamped to zero) and fills in the ranking.
CentralityVector make_centrality(Eigen::VectorXd scores, std::string tag,
                                 double clamp_floor = 1e-8);

// Ranking permutation for arbitrary scores (descending, id tie-break).
std::vector<int> rank_by_score(const Eigen::VectorXd& scores);

// Spearman rank correlation with tie correction (average ranks, Pearson on
// the rank vectors). `tie_tolerance` groups scores within that absolute
// distance as tied; 0 means exact ties only.
double spearman(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                double tie_tolerance = 0.0);

// Fraction of shared members between the two top-k sets.
double top_k_overlap(const std::vector<int>& ranking_a,
                     const std::vector<int>& ranking_b, int k);

// Average (1-based) rank of `members` under `scores`, with average ranks
// for ties so the statistic is stable under reorderings.
double mean_rank(const Eigen::VectorXd& scores, const std::vector<int>& members);

}  // namespace rspbc

#endif
