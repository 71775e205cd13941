#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rspbc/classical.hpp"
#include "rspbc/edge_list.hpp"
#include "rspbc/generators.hpp"
#include "rspbc/rsp_net.hpp"
#include "rspbc/rsp_simple.hpp"
#include "support/fixtures.hpp"

using namespace rspbc;

namespace {

struct Solved {
  TransitionModel model;
  KilledWalkMatrix w;
  FundamentalSolve f;
};

Solved solve(const Graph& g, TransitionPolicy policy, double beta) {
  Solved s;
  s.model = reference_transitions(g, policy);
  s.w = killed_transition_matrix(g, s.model, beta);
  s.f = fundamental_matrix(s.w);
  return s;
}

}  // namespace

TEST_CASE("two-cycle pair matrix concentrates on the one path") {
  const Graph g = rspbc::testing::two_cycle();
  const Solved s = solve(g, TransitionPolicy::kWeightProportional,
                         std::log(2.0));
  const Eigen::MatrixXd n12 = pair_flow_matrix(g, s.f, s.w, 0, 1);
  CHECK(n12(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(n12(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(n12(0, 0) == 0.0);
  CHECK(n12(1, 1) == 0.0);
  CHECK_THROWS_AS(pair_flow_matrix(g, s.f, s.w, 0, 0), ValidationError);
}

TEST_CASE("pair matrix zeroes unreachable pairs") {
  // 2 <-> 3 strongly connected; 1 feeds in and is unreachable.
  const Graph g =
      load_edge_list("1 2 1\n2 3 1\n3 2 1", true, CostPolicy::kUnit);
  const Solved s = solve(g, TransitionPolicy::kWeightProportional, 1.0);
  const Eigen::MatrixXd n12 = pair_flow_matrix(g, s.f, s.w, 0, 1);
  // Pairs targeting node 1 can never use the arc; pairs from node 1 can.
  CHECK(n12(1, 0) == 0.0);
  CHECK(n12(2, 0) == 0.0);
  CHECK(n12(0, 1) > 0.0);
  CHECK(n12.minCoeff() >= 0.0);
}

TEST_CASE("3-path pair matrices carry exactly one unit of net flow") {
  const Graph g = path_graph(3);
  const Solved s = solve(g, TransitionPolicy::kDegreeUniform, 1.0);
  const Eigen::MatrixXd n12 = pair_flow_matrix(g, s.f, s.w, 0, 1);
  const Eigen::MatrixXd n21 = pair_flow_matrix(g, s.f, s.w, 1, 0);
  CHECK(n12(0, 2) - n21(0, 2) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("3-path edge net flow is 4 at any beta") {
  const Graph g = path_graph(3);
  for (double beta : {1e-6, 0.3, 1.0, 50.0}) {
    const Solved s = solve(g, TransitionPolicy::kDegreeUniform, beta);
    CHECK(edge_net_flow(g, s.f, s.w, 0, 1).net_flow ==
          doctest::Approx(4.0).epsilon(1e-9));
    CHECK(edge_net_flow(g, s.f, s.w, 1, 2).net_flow ==
          doctest::Approx(4.0).epsilon(1e-9));
  }
}

TEST_CASE("two-cycle edge net flow sums both directions") {
  const Graph g = rspbc::testing::two_cycle();
  const Solved s = solve(g, TransitionPolicy::kWeightProportional, 0.7);
  CHECK(edge_net_flow(g, s.f, s.w, 0, 1).net_flow ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("edge net flow requires at least one arc") {
  const Graph g = path_graph(3);
  const Solved s = solve(g, TransitionPolicy::kDegreeUniform, 1.0);
  try {
    edge_net_flow(g, s.f, s.w, 0, 2);  // nodes 1 and 3 are not adjacent
    FAIL("expected missing-arc");
  } catch (const ValidationError& e) {
    CHECK(e.reason() == "missing-arc");
  }
}

TEST_CASE("absolute value is taken per pair, not after summation") {
  // On the 4-cycle the two orderings of an opposite pair push flow through
  // an edge in opposite directions, so summing before the absolute value
  // cancels what the measure must count.
  const Graph g = cycle_graph(4);
  const Solved s = solve(g, TransitionPolicy::kDegreeUniform, 1e-6);
  const Eigen::MatrixXd n12 = pair_flow_matrix(g, s.f, s.w, 0, 1);
  const Eigen::MatrixXd n21 = pair_flow_matrix(g, s.f, s.w, 1, 0);
  const double abs_then_sum = (n12 - n21).cwiseAbs().sum();
  const double sum_then_abs = std::abs((n12 - n21).sum());
  CHECK(abs_then_sum > sum_then_abs + 1.0);
  CHECK(edge_net_flow(g, s.f, s.w, 0, 1).net_flow ==
        doctest::Approx(abs_then_sum).epsilon(1e-12));
}

TEST_CASE("3-path net betweenness is (4, 8, 4) at every beta") {
  const Graph g = path_graph(3);
  for (double beta : {1e-6, 1.0, 50.0}) {
    const CentralityVector cv =
        rsp_net_betweenness(g, TransitionPolicy::kDegreeUniform, beta);
    CHECK(cv.scores[0] == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(cv.scores[1] == doctest::Approx(8.0).epsilon(1e-6));
    CHECK(cv.scores[2] == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(cv.warning.empty());
  }
}

TEST_CASE("single edge nets one unit per ordered pair") {
  // Pairs (1,2) and (2,1) each push net flow 1 through the edge, and the
  // edge credits both endpoints, so each node scores 2. This is the same
  // counting that makes the 3-path score (4, 8, 4).
  const Graph g = path_graph(2);
  const CentralityVector cv =
      rsp_net_betweenness(g, TransitionPolicy::kDegreeUniform, 2.0);
  CHECK(cv.scores[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(cv.scores[1] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("triangle symmetry forces equal net scores") {
  const Graph g = complete_graph(3);
  const CentralityVector cv =
      rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, 0.9);
  CHECK(std::abs(cv.scores[0] - cv.scores[1]) < 1e-9);
  CHECK(std::abs(cv.scores[1] - cv.scores[2]) < 1e-9);
}

TEST_CASE("directed graphs are accepted with a warning annotation") {
  const Graph g =
      load_edge_list("1 2 1\n2 3 1\n3 1 1", true, CostPolicy::kUnit);
  const CentralityVector cv =
      rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, 1.0);
  CHECK(!cv.warning.empty());
  CHECK(cv.warning.find("directed") != std::string::npos);
}

TEST_CASE("net flow never exceeds gross flow") {
  for (uint64_t seed : {5ull, 14ull}) {
    const Graph g =
        rspbc::testing::random_connected_graph(8, 6, seed, true, false);
    for (double beta : {0.5, 2.0}) {
      const Solved s = solve(g, TransitionPolicy::kWeightProportional, beta);
      for (const auto& [i, j] : g.undirected_edges()) {
        const Eigen::MatrixXd nij = pair_flow_matrix(g, s.f, s.w, i, j);
        const Eigen::MatrixXd nji = pair_flow_matrix(g, s.f, s.w, j, i);
        // |eta_ij - eta_ji| <= eta_ij + eta_ji entrywise.
        CHECK(((nij + nji) - (nij - nji).cwiseAbs()).minCoeff() >= -1e-12);
      }
    }
  }
}

TEST_CASE("tree net betweenness is beta-invariant and equals current flow") {
  for (uint64_t seed : {3ull, 9ull}) {
    const Graph tree =
        rspbc::testing::random_connected_graph(9, 0, seed, false, false);
    const CentralityVector cfb = current_flow_betweenness(tree);
    const double scale = std::max(1.0, cfb.scores.maxCoeff());
    for (double beta : {1e-6, 1.0, 20.0}) {
      const CentralityVector cv = rsp_net_betweenness(
          tree, TransitionPolicy::kWeightProportional, beta);
      CHECK((cv.scores - cfb.scores).cwiseAbs().maxCoeff() < 1e-9 * scale);
    }
  }
}

TEST_CASE("undirected fast path agrees with the arc-loop form") {
  // The same topology declared directed (both arcs listed) must produce
  // identical scores through the directed code path.
  const Graph undirected =
      rspbc::testing::random_connected_graph(7, 5, 31, true, false);
  GraphBuilder b(false);
  for (int i = 0; i < undirected.node_count(); ++i) {
    b.ensure_node(undirected.label(i));
  }
  for (const Arc& a : undirected.arcs()) {
    b.add_edge(undirected.label(a.src), undirected.label(a.dst), a.weight,
               a.cost);
  }
  const Graph directed = b.build();
  const CentralityVector fast = rsp_net_betweenness(
      undirected, TransitionPolicy::kWeightProportional, 0.8);
  const CentralityVector slow = rsp_net_betweenness(
      directed, TransitionPolicy::kWeightProportional, 0.8);
  CHECK((fast.scores - slow.scores).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("threaded edge loop is deterministic and matches sequential") {
  const Graph g = rspbc::testing::random_connected_graph(10, 12, 55, true);
  const CentralityVector seq =
      rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, 1.2, 1);
  const CentralityVector par1 =
      rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, 1.2, 3);
  const CentralityVector par2 =
      rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, 1.2, 3);
  CHECK((par1.scores - par2.scores).cwiseAbs().maxCoeff() == 0.0);
  CHECK((par1.scores - seq.scores).cwiseAbs().maxCoeff() <
        1e-12 * seq.scores.maxCoeff());
}

TEST_CASE("net scores stay below simple scores plus terminal corrections") {
  // Gross outflow bounds net outflow; the simple measure counts gross
  // departures, so per node: net <= 2 * simple + endpoint slack. Checked
  // concretely through the pairwise inequality above; here the batch level.
  const Graph g = rspbc::testing::random_connected_graph(8, 5, 77, false);
  for (double beta : {0.5, 5.0}) {
    const CentralityVector net =
        rsp_net_betweenness(g, TransitionPolicy::kWeightProportional, beta);
    const CentralityVector simple =
        rsp_betweenness(g, TransitionPolicy::kWeightProportional, beta);
    for (int i = 0; i < g.node_count(); ++i) {
      CHECK(net.scores[i] <= 2.0 * simple.scores[i] + 1e-9);
    }
  }
}
