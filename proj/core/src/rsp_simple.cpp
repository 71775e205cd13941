#include "rspbc/rsp_simple.hpp"

#include <cmath>
#include <string>

namespace rspbc {

namespace {

void require_strongly_connected(const Graph& g) {
  if (check_strong_connectivity(g).count != 1) {
    throw ValidationError("not-strongly-connected",
                          "this measure requires a strongly connected graph");
  }
}

std::string rsp_tag(const char* name, TransitionPolicy policy, double beta) {
  return std::string(name) + "(beta=" + std::to_string(beta) +
         ", policy=" + to_string(policy) + ")";
}

}  // namespace

PairFlowField pair_edge_flows(const Graph& g, const FundamentalSolve& f,
                              const KilledWalkMatrix& w, int s, int t) {
  if (s == t) {
    throw ValidationError("identical-pair", "pair flows require s != t");
  }
  const Eigen::MatrixXd& z = f.z;
  if (!(z(s, t) > 0.0)) {
    throw ValidationError("unreachable-pair",
                          "node '" + g.label(t) + "' is unreachable from '" +
                              g.label(s) + "' (z_st = 0)");
  }
  const int n = g.node_count();
  // bracket_i = z_si/z_st - z_ti/z_tt; exactly 0 at i = t.
  const Eigen::VectorXd bracket =
      z.row(s).transpose() / z(s, t) - z.row(t).transpose() / z(t, t);

  PairFlowField field;
  field.source = s;
  field.target = t;
  field.node_visits = bracket.cwiseProduct(z.col(t));
  field.edge_flows.resize(g.arc_count());
  for (int k = 0; k < g.arc_count(); ++k) {
    const Arc& a = g.arc(k);
    field.edge_flows[k] = bracket[a.src] * w.w(a.src, a.dst) * z(a.dst, t);
  }
  auto clamp = [&](Eigen::VectorXd& v, const char* what) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] < 0.0) {
        if (v[i] < -1e-12) {
          throw NumericalError("negative-flow",
                               std::string(what) +
                                   " went negative beyond floating noise; "
                                   "fundamental solve is inconsistent");
        }
        v[i] = 0.0;
      }
    }
  };
  clamp(field.edge_flows, "edge flow");
  clamp(field.node_visits, "node visit count");
  return field;
}

CentralityVector rsp_betweenness(const Graph& g, TransitionPolicy policy,
                                 double beta) {
  require_strongly_connected(g);
  const TransitionModel model = reference_transitions(g, policy);
  const KilledWalkMatrix w = killed_transition_matrix(g, model, beta);
  const FundamentalSolve f = fundamental_matrix(w);
  require_positive_fundamental(f);

  const auto n = f.z.rows();
  // T = Z^div - n Diag(Z^div); bet_i = sum_k (Z T^T)_ik z_ki.
  Eigen::MatrixXd t = f.z.cwiseInverse();
  t.diagonal() *= 1.0 - static_cast<double>(n);
  const Eigen::MatrixXd u = f.z * t.transpose();
  Eigen::VectorXd scores =
      u.cwiseProduct(f.z.transpose()).rowwise().sum();
  return make_centrality(std::move(scores),
                         rsp_tag("rsp", policy, beta));
}

std::vector<CentralityVector> rsp_betweenness_sweep(
    const Graph& g, TransitionPolicy policy, std::span<const double> betas) {
  if (betas.empty()) {
    throw ValidationError("empty-beta-list",
                          "sweep requires at least one beta");
  }
  std::vector<CentralityVector> out;
  out.reserve(betas.size());
  for (double beta : betas) {
    try {
      out.push_back(rsp_betweenness(g, policy, beta));
    } catch (const NumericalError& e) {
      throw NumericalError(
          e.reason(), "beta=" + std::to_string(beta) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(
          e.reason(), "beta=" + std::to_string(beta) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace rspbc
