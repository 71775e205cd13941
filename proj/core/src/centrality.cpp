#include "rspbc/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rspbc {

std::vector<int> CentralityVector::rank_of_node() const {
  std::vector<int> rank(ranking.size(), 0);
  for (size_t r = 0; r < ranking.size(); ++r) {
    rank[static_cast<size_t>(ranking[r])] = static_cast<int>(r) + 1;
  }
  return rank;
}

std::vector<int> rank_by_score(const Eigen::VectorXd& scores) {
  std::vector<int> order(static_cast<size_t>(scores.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

CentralityVector make_centrality(Eigen::VectorXd scores, std::string tag,
                                 double clamp_floor) {
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw NumericalError("nonfinite-score",
                           "measure '" + tag + "' produced a non-finite score");
    }
    if (scores[i] < 0.0) {
      if (scores[i] < -clamp_floor) {
        throw NumericalError("negative-score",
                             "measure '" + tag +
                                 "' produced a negative score beyond the "
                                 "floating-noise floor");
      }
      scores[i] = 0.0;
    }
  }
  CentralityVector cv;
  cv.ranking = rank_by_score(scores);
  cv.scores = std::move(scores);
  cv.measure_tag = std::move(tag);
  return cv;
}

namespace {

// Average ranks (1-based) with ties sharing their mean rank.
Eigen::VectorXd average_ranks(const Eigen::VectorXd& scores,
                              double tie_tolerance) {
  const auto n = scores.size();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return scores[a] < scores[b]; });
  Eigen::VectorXd ranks(n);
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i;
    while (j + 1 < n &&
           scores[order[static_cast<size_t>(j + 1)]] -
                   scores[order[static_cast<size_t>(i)]] <=
               tie_tolerance) {
      ++j;
    }
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (Eigen::Index k = i; k <= j; ++k) {
      ranks[order[static_cast<size_t>(k)]] = shared;
    }
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                double tie_tolerance) {
  if (a.size() != b.size() || a.size() < 2) {
    throw ValidationError("mismatched-score-vectors",
                          "spearman needs two equally sized vectors with at "
                          "least two entries");
  }
  const Eigen::VectorXd ra = average_ranks(a, tie_tolerance);
  const Eigen::VectorXd rb = average_ranks(b, tie_tolerance);
  const double ma = ra.mean();
  const double mb = rb.mean();
  const Eigen::VectorXd da = ra.array() - ma;
  const Eigen::VectorXd db = rb.array() - mb;
  const double denom = std::sqrt(da.squaredNorm() * db.squaredNorm());
  if (denom == 0.0) {
    // All ranks tied on one side: correlation is degenerate; call it 1 when
    // both sides are constant, 0 otherwise.
    return (da.squaredNorm() == 0.0 && db.squaredNorm() == 0.0) ? 1.0 : 0.0;
  }
  return da.dot(db) / denom;
}

double top_k_overlap(const std::vector<int>& ranking_a,
                     const std::vector<int>& ranking_b, int k) {
  const int n = static_cast<int>(ranking_a.size());
  k = std::min(k, n);
  if (k <= 0) return 1.0;
  std::vector<bool> in_a(static_cast<size_t>(n), false);
  for (int r = 0; r < k; ++r) in_a[static_cast<size_t>(ranking_a[r])] = true;
  int shared = 0;
  for (int r = 0; r < k; ++r) {
    if (in_a[static_cast<size_t>(ranking_b[r])]) ++shared;
  }
  return static_cast<double>(shared) / static_cast<double>(k);
}

double mean_rank(const Eigen::VectorXd& scores,
                 const std::vector<int>& members) {
  if (members.empty()) {
    throw ValidationError("empty-group", "mean rank of an empty group");
  }
  // Rank 1 = highest score, average ranks over ties.
  const Eigen::VectorXd asc = average_ranks(scores, 0.0);
  const double n = static_cast<double>(scores.size());
  double total = 0.0;
  for (int node : members) total += n + 1.0 - asc[node];
  return total / static_cast<double>(members.size());
}

}  // namespace rspbc
