#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rspbc/generators.hpp"
#include "rspbc/linalg.hpp"
#include "rspbc/path_oracle.hpp"
#include "support/fixtures.hpp"

using namespace rspbc;

namespace {

// Independent recursive path counter (no materialization) used to certify
// the ensemble is exhaustive.
long long count_paths(const Graph& g, int node, int t, int remaining) {
  long long total = 0;
  for (int k : g.out_arcs(node)) {
    const int next = g.arc(k).dst;
    if (next == t) {
      ++total;
    } else if (remaining > 1) {
      total += count_paths(g, next, t, remaining - 1);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("3-path ensemble at cap 5 holds exactly the two bounce patterns") {
  const Graph g = path_graph(3);
  const PathEnsemble e =
      enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, 5);
  REQUIRE(e.path_count() == 2);
  const size_t direct = e.path(0).size() == 3 ? 0 : 1;
  const size_t bounce = 1 - direct;
  // (1,2,3): cost 2, likelihood 1 * 1/2.
  CHECK(e.path(direct).size() == 3);
  CHECK(e.costs[direct] == doctest::Approx(2.0));
  CHECK(e.likelihoods[direct] == doctest::Approx(0.5));
  // (1,2,1,2,3): cost 4, likelihood 1 * 1/2 * 1 * 1/2.
  CHECK(e.path(bounce).size() == 5);
  CHECK(e.costs[bounce] == doctest::Approx(4.0));
  CHECK(e.likelihoods[bounce] == doctest::Approx(0.25));
}

TEST_CASE("single edge has exactly one absorbing path at any cap") {
  const Graph g = path_graph(2);
  for (int cap : {1, 7, 30}) {
    const PathEnsemble e =
        enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 1, cap);
    CHECK(e.path_count() == 1);
  }
}

TEST_CASE("3-path bounce counts follow the closed form") {
  // Bounce paths have even lengths 2, 4, ..., so an odd cap 2k+1 admits k
  // of them and the even cap 2k+2 admits one more.
  const Graph g = path_graph(3);
  for (int k : {1, 2, 5, 10}) {
    const PathEnsemble odd =
        enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, 2 * k + 1);
    CHECK(odd.path_count() == static_cast<size_t>(k));
    const PathEnsemble even =
        enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, 2 * k + 2);
    CHECK(even.path_count() == static_cast<size_t>(k + 1));
  }
}

TEST_CASE("enumeration is exhaustive against an independent count") {
  for (uint64_t seed : {3ull, 8ull}) {
    const Graph g =
        rspbc::testing::random_connected_graph(5, 3, seed, false, false);
    for (int cap : {3, 6, 9}) {
      const PathEnsemble e =
          enumerate_paths(g, TransitionPolicy::kWeightProportional, 0,
                          g.node_count() - 1, cap);
      CHECK(e.path_count() ==
            static_cast<size_t>(count_paths(g, 0, g.node_count() - 1, cap)));
      // Well-formed paths: start, end, target only terminal, real arcs.
      for (size_t p = 0; p < e.path_count(); ++p) {
        const auto path = e.path(p);
        CHECK(path.front() == 0);
        CHECK(path.back() == g.node_count() - 1);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          CHECK(path[i] != g.node_count() - 1);
          CHECK(g.has_arc(path[i], path[i + 1]));
        }
      }
    }
  }
}

TEST_CASE("path budget is enforced") {
  const Graph g = complete_graph(6);
  OracleOptions options;
  options.path_budget = 1000;
  try {
    enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 5, 30, options);
    FAIL("expected budget error");
  } catch (const ValidationError& e) {
    CHECK(e.reason() == "path-budget-exceeded");
  }
}

TEST_CASE("degenerate requests are rejected") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(enumerate_paths(g, TransitionPolicy::kDegreeUniform, 1, 1, 5),
                  ValidationError);
  CHECK_THROWS_AS(enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, 0),
                  ValidationError);
}

TEST_CASE("two-cycle partition estimate is exact at any cap") {
  const Graph g = rspbc::testing::two_cycle();
  for (int cap : {1, 4, 20}) {
    const PathEnsemble e =
        enumerate_paths(g, TransitionPolicy::kWeightProportional, 0, 1, cap);
    const OracleQuantities q = oracle_rsp_quantities(g, e, std::log(2.0));
    CHECK(q.partition_estimate == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("3-path partition estimate converges to the closed form") {
  const Graph g = path_graph(3);
  const TransitionModel t =
      reference_transitions(g, TransitionPolicy::kDegreeUniform);
  const FundamentalSolve f =
      fundamental_matrix(killed_transition_matrix(g, t, 1.0));
  const PathEnsemble e =
      enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, 40);
  const OracleQuantities q = oracle_rsp_quantities(g, e, 1.0);
  CHECK(std::abs(q.partition_estimate - pair_partition_function(f, 0, 2)) <
        1e-9);
}

TEST_CASE("terminal visits pin the convention") {
  const Graph g = path_graph(3);
  const PathEnsemble e =
      enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, 21);
  const OracleQuantities q = oracle_rsp_quantities(g, e, 1.0);
  CHECK(q.node_visit_estimates[2] == 0.0);
  CHECK(q.node_visit_estimates_with_terminal[2] == doctest::Approx(1.0));
  CHECK(q.node_visit_estimates_with_terminal[0] ==
        doctest::Approx(q.node_visit_estimates[0]));
}

TEST_CASE("partition estimates grow monotonically with the cap") {
  const Graph g = cycle_graph(4);
  double previous = 0.0;
  for (int cap : {3, 7, 15, 25}) {
    const PathEnsemble e =
        enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 2, cap);
    const OracleQuantities q = oracle_rsp_quantities(g, e, 0.5);
    CHECK(q.partition_estimate >= previous);
    previous = q.partition_estimate;
  }
  CHECK(previous > 0.0);
}

TEST_CASE("tail respects the substochastic truncation bound") {
  const Graph g = rspbc::testing::random_connected_graph(6, 3, 12);
  const TransitionModel t =
      reference_transitions(g, TransitionPolicy::kWeightProportional);
  for (double beta : {0.5, 1.0}) {
    const KilledWalkMatrix w = killed_transition_matrix(g, t, beta);
    const double rho = w.w.rowwise().sum().maxCoeff();
    const FundamentalSolve f = fundamental_matrix(w);
    for (int cap : {10, 16, 22}) {
      const PathEnsemble e = enumerate_paths(
          g, TransitionPolicy::kWeightProportional, 0, 3, cap);
      const OracleQuantities q = oracle_rsp_quantities(g, e, beta);
      CHECK(q.last_increment <= std::pow(rho, cap) * (1.0 + 1e-9) + 1e-300);
      const double tail_bound = std::pow(rho, cap + 1) / (1.0 - rho);
      CHECK(std::abs(pair_partition_function(f, 0, 3) -
                     q.partition_estimate) <= tail_bound + 1e-12);
    }
  }
}

TEST_CASE("empty ensembles are reported as unreachable") {
  const Graph g = path_graph(4);
  const PathEnsemble e =
      enumerate_paths(g, TransitionPolicy::kDegreeUniform, 0, 3, 1);
  CHECK(e.path_count() == 0);
  CHECK_THROWS_AS(oracle_rsp_quantities(g, e, 1.0), ValidationError);
  CHECK_THROWS_AS(
      truncated_rsp_sums(g, TransitionPolicy::kDegreeUniform, 0, 3, 1, 1.0),
      ValidationError);
}

TEST_CASE("recursion route reproduces the enumerated sums exactly") {
  // Same truncated sums, two evaluators: materialized paths vs the
  // length-indexed recursion. They must agree to near machine precision on
  // every cap and beta, which certifies the recursion as a path sum.
  for (uint64_t seed : {3ull, 8ull, 15ull}) {
    const Graph g =
        rspbc::testing::random_connected_graph(6, 3, seed, true, true);
    for (int cap : {1, 2, 5, 9, 14}) {
      for (double beta : {0.5, 1.0, 5.0}) {
        const PathEnsemble e = enumerate_paths(
            g, TransitionPolicy::kWeightProportional, 0, 4, cap);
        if (e.path_count() == 0) {
          CHECK_THROWS_AS(
              truncated_rsp_sums(g, TransitionPolicy::kWeightProportional, 0,
                                 4, cap, beta),
              ValidationError);
          continue;
        }
        const OracleQuantities a = oracle_rsp_quantities(g, e, beta);
        const OracleQuantities b = truncated_rsp_sums(
            g, TransitionPolicy::kWeightProportional, 0, 4, cap, beta);
        CHECK(std::abs(a.partition_estimate - b.partition_estimate) <= 1e-13);
        CHECK(std::abs(a.last_increment - b.last_increment) <= 1e-13);
        CHECK((a.node_visit_estimates - b.node_visit_estimates)
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
        CHECK((a.edge_flow_estimates - b.edge_flow_estimates)
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("recursion route converges to the closed forms on a dense graph") {
  const Graph g = complete_graph(4);
  const TransitionModel t =
      reference_transitions(g, TransitionPolicy::kWeightProportional);
  const KilledWalkMatrix w = killed_transition_matrix(g, t, 0.5);
  const FundamentalSolve f = fundamental_matrix(w);
  const OracleQuantities q = truncated_rsp_sums(
      g, TransitionPolicy::kWeightProportional, 0, 3, 40, 0.5);
  CHECK(std::abs(q.partition_estimate - pair_partition_function(f, 0, 3)) <
        1e-8);
}
