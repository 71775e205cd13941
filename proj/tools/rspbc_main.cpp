// rspbc: compute RSP and classical betweenness measures on edge lists,
// sweep beta, compare rankings, cross-check against the path oracle, and
// export DOT heat maps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rspbc/centrality.hpp"
#include "rspbc/classical.hpp"
#include "rspbc/edge_list.hpp"
#include "rspbc/generators.hpp"
#include "rspbc/linalg.hpp"
#include "rspbc/path_oracle.hpp"
#include "rspbc/rsp_net.hpp"
#include "rspbc/rsp_simple.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rspbc;

constexpr const char* kToolVersion = "0.1.0";

const std::vector<std::string> kMeasures = {
    "rsp",          "rsp-net",   "sp",         "sp-likelihood",
    "current-flow", "stationary", "degree-limit", "hitting-sum"};

struct RunManifest {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> generator;
  bool directed = false;
  std::string measure;
  std::vector<double> betas;
  std::string transition_policy = "weight";
  std::string cost_policy = "unit";
  std::optional<std::string> group;
  std::string out_prefix;
  int threads = 1;
  uint64_t seed = 0;

  ordered_json to_json() const {
    ordered_json j;
    j["tool"] = "rspbc";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input"] = input ? ordered_json(*input) : ordered_json(nullptr);
    j["generator"] = generator ? ordered_json(*generator) : ordered_json(nullptr);
    j["directed"] = directed;
    j["measure"] = measure;
    j["betas"] = betas;
    j["transition_policy"] = transition_policy;
    j["cost_policy"] = cost_policy;
    j["group"] = group ? ordered_json(*group) : ordered_json(nullptr);
    j["out_prefix"] = out_prefix;
    j["threads"] = threads;
    j["seed"] = seed;
    return j;
  }
};

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Graph generate_graph(const std::string& spec, uint64_t seed) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) parts.push_back(tok);
    return parts;
  };
  auto as_int = [&](const std::string& s) {
    try {
      size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("invalid-generator-spec",
                            "cannot parse integer '" + s + "'");
    }
  };
  auto as_real = [&](const std::string& s) {
    try {
      size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("invalid-generator-spec",
                            "cannot parse real '" + s + "'");
    }
  };
  const auto parts = split(spec, ':');
  if (parts.empty()) {
    throw ValidationError("invalid-generator-spec", "empty generator spec");
  }
  const std::string& kind = parts[0];
  if (kind == "three-community") return three_community_regular();
  if (kind == "path" && parts.size() == 2) return path_graph(as_int(parts[1]));
  if (kind == "cycle" && parts.size() == 2) return cycle_graph(as_int(parts[1]));
  if (kind == "complete" && parts.size() == 2) {
    return complete_graph(as_int(parts[1]));
  }
  if (kind == "grid" && parts.size() == 2) {
    const auto dims = split(parts[1], 'x');
    if (dims.size() == 2) return grid_graph(as_int(dims[0]), as_int(dims[1]));
  }
  if (kind == "sbm" && parts.size() == 4) {
    const auto sizes = split(parts[1], ',');
    if (sizes.size() == 3) {
      CommunitySpec cs;
      cs.size_a = as_int(sizes[0]);
      cs.size_b = as_int(sizes[1]);
      cs.size_c = as_int(sizes[2]);
      cs.p_in = as_real(parts[2]);
      cs.p_bridge = as_real(parts[3]);
      cs.seed = seed;
      return sbm_three_block(cs);
    }
  }
  throw ValidationError(
      "invalid-generator-spec",
      "unknown generator '" + spec +
          "' (expected path:N, cycle:N, complete:N, grid:WxH, "
          "three-community, or sbm:NA,NB,NC:PIN:PBRIDGE)");
}

Graph load_graph(const RunManifest& m) {
  if (m.input && m.generator) {
    throw ValidationError("conflicting-input",
                          "--input and --generate are mutually exclusive");
  }
  if (m.input) {
    return load_edge_list_file(*m.input, m.directed,
                               cost_policy_from_string(m.cost_policy));
  }
  if (m.generator) {
    if (m.directed) {
      throw ValidationError("directed-generator-unsupported",
                            "generated fixtures are undirected");
    }
    return generate_graph(*m.generator, m.seed);
  }
  throw ValidationError("missing-input", "one of --input/--generate required");
}

void require_strongly_connected_cli(const Graph& g) {
  if (check_strong_connectivity(g).count != 1) {
    throw ValidationError("not-strongly-connected",
                          "this measure requires a strongly connected graph");
  }
}

bool measure_uses_beta(const std::string& measure) {
  return measure == "rsp" || measure == "rsp-net";
}

CentralityVector compute_measure(const Graph& g, const RunManifest& m,
                                 double beta) {
  const TransitionPolicy policy =
      transition_policy_from_string(m.transition_policy);
  if (m.measure == "rsp") return rsp_betweenness(g, policy, beta);
  if (m.measure == "rsp-net") {
    return rsp_net_betweenness(g, policy, beta, m.threads);
  }
  if (m.measure == "sp") return shortest_path_betweenness(g);
  if (m.measure == "sp-likelihood") {
    return shortest_path_likelihood_betweenness(g, policy);
  }
  if (m.measure == "current-flow") return current_flow_betweenness(g);
  if (m.measure == "stationary") {
    require_strongly_connected_cli(g);
    return make_centrality(
        stationary_distribution(reference_transitions(g, policy)),
        "stationary(policy=" + m.transition_policy + ")");
  }
  if (m.measure == "degree-limit") return degree_limit_scores(g, policy);
  if (m.measure == "hitting-sum") {
    // Graph-level constant surfaced as a flat score vector so sweeps and
    // comparisons can consume it like any other measure.
    require_strongly_connected_cli(g);
    const double h = summed_hitting_times(reference_transitions(g, policy));
    return make_centrality(
        Eigen::VectorXd::Constant(g.node_count(), h),
        "hitting-sum(policy=" + m.transition_policy + ")");
  }
  throw ValidationError("unknown-measure", "unknown measure '" + m.measure +
                                               "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("output-unwritable", "cannot write '" + path + "'");
  }
  out << content;
}

std::string score_csv(const RunManifest& m, const Graph& g,
                      const CentralityVector& cv) {
  std::ostringstream out;
  out << "# manifest: " << m.to_json().dump() << "\n";
  out << "node_id,score,rank\n";
  const auto rank_of = cv.rank_of_node();
  for (size_t r = 0; r < cv.ranking.size(); ++r) {
    const int node = cv.ranking[r];
    out << g.label(node) << ',' << format_sig(cv.scores[node]) << ','
        << rank_of[static_cast<size_t>(node)] << "\n";
  }
  return out.str();
}

ordered_json score_json(const RunManifest& m, const Graph& g,
                        const CentralityVector& cv) {
  ordered_json j;
  j["manifest"] = m.to_json();
  j["measure_tag"] = cv.measure_tag;
  if (!cv.warning.empty()) j["warning"] = cv.warning;
  ordered_json scores = ordered_json::array();
  const auto rank_of = cv.rank_of_node();
  for (size_t r = 0; r < cv.ranking.size(); ++r) {
    const int node = cv.ranking[r];
    scores.push_back({{"node_id", g.label(node)},
                      {"score", cv.scores[node]},
                      {"rank", rank_of[static_cast<size_t>(node)]}});
  }
  j["scores"] = scores;
  return j;
}

void emit_scores(const RunManifest& m, const Graph& g,
                 const CentralityVector& cv) {
  const std::string csv = score_csv(m, g, cv);
  if (m.out_prefix.empty()) {
    std::cout << csv;
    return;
  }
  write_file(m.out_prefix + ".csv", csv);
  write_file(m.out_prefix + ".json", score_json(m, g, cv).dump(2) + "\n");
  if (!cv.warning.empty()) std::cerr << "warning: " << cv.warning << "\n";
}

std::vector<int> read_group_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("input-not-found", "cannot open '" + path + "'");
  }
  std::vector<int> members;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      if (tok[0] == '#') break;
      const int node = g.node_by_label(tok);
      if (node < 0) {
        throw ValidationError("unknown-group-node",
                              "group file names unknown node '" + tok + "'");
      }
      members.push_back(node);
    }
  }
  if (members.empty()) {
    throw ValidationError("empty-group", "group file contains no nodes");
  }
  return members;
}

int cmd_compute(const RunManifest& m) {
  const Graph g = load_graph(m);
  if (measure_uses_beta(m.measure) && m.betas.size() != 1) {
    throw ValidationError("single-beta-required",
                          "compute takes exactly one --beta for " + m.measure);
  }
  if (!measure_uses_beta(m.measure) && !m.betas.empty()) {
    throw ValidationError("beta-not-applicable",
                          m.measure + " does not take --beta");
  }
  const double beta = m.betas.empty() ? 0.0 : m.betas[0];
  emit_scores(m, g, compute_measure(g, m, beta));
  return 0;
}

int cmd_sweep(const RunManifest& m) {
  const Graph g = load_graph(m);
  if (!measure_uses_beta(m.measure)) {
    throw ValidationError("beta-not-applicable",
                          "sweep is defined for rsp and rsp-net only");
  }
  if (m.betas.empty()) {
    throw ValidationError("empty-beta-list", "sweep needs at least one --beta");
  }
  std::vector<int> group;
  if (m.group) group = read_group_file(*m.group, g);

  std::ostringstream csv;
  csv << "# manifest: " << m.to_json().dump() << "\n";
  csv << "beta,node_id,score,rank\n";
  std::ostringstream group_csv;
  group_csv << "# manifest: " << m.to_json().dump() << "\n";
  group_csv << "beta,group_size,mean_rank\n";

  for (double beta : m.betas) {
    CentralityVector cv;
    try {
      cv = compute_measure(g, m, beta);
    } catch (const NumericalError& e) {
      throw NumericalError(e.reason(),
                           "beta=" + format_sig(beta) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(e.reason(),
                            "beta=" + format_sig(beta) + ": " + e.what());
    }
    const auto rank_of = cv.rank_of_node();
    for (size_t r = 0; r < cv.ranking.size(); ++r) {
      const int node = cv.ranking[r];
      csv << format_sig(beta) << ',' << g.label(node) << ','
          << format_sig(cv.scores[node]) << ','
          << rank_of[static_cast<size_t>(node)] << "\n";
    }
    if (!group.empty()) {
      group_csv << format_sig(beta) << ',' << group.size() << ','
                << format_sig(mean_rank(cv.scores, group)) << "\n";
    }
  }
  if (m.out_prefix.empty()) {
    std::cout << csv.str();
    if (!group.empty()) std::cout << group_csv.str();
  } else {
    write_file(m.out_prefix + ".csv", csv.str());
    if (!group.empty()) {
      write_file(m.out_prefix + "_group.csv", group_csv.str());
    }
  }
  return 0;
}

struct ScoreTable {
  std::vector<std::string> labels;
  std::vector<double> scores;
};

ScoreTable read_score_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("input-not-found", "cannot open '" + path + "'");
  }
  ScoreTable table;
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // node_id,score,rank
      continue;
    }
    std::istringstream row(line);
    std::string label, score, rank;
    if (!std::getline(row, label, ',') || !std::getline(row, score, ',') ||
        !std::getline(row, rank, ',')) {
      throw ValidationError("malformed-row",
                            path + " line " + std::to_string(line_no) +
                                ": expected `node_id,score,rank`");
    }
    table.labels.push_back(label);
    try {
      table.scores.push_back(std::stod(score));
    } catch (const std::exception&) {
      throw ValidationError("malformed-row",
                            path + " line " + std::to_string(line_no) +
                                ": cannot parse score '" + score + "'");
    }
  }
  if (table.labels.empty()) {
    throw ValidationError("empty-score-file", path + " holds no score rows");
  }
  return table;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& out_prefix) {
  const ScoreTable a = read_score_csv(path_a);
  const ScoreTable b = read_score_csv(path_b);
  std::map<std::string, double> by_label_a, by_label_b;
  for (size_t i = 0; i < a.labels.size(); ++i) {
    by_label_a[a.labels[i]] = a.scores[i];
  }
  for (size_t i = 0; i < b.labels.size(); ++i) {
    by_label_b[b.labels[i]] = b.scores[i];
  }
  if (by_label_a.size() != a.labels.size() ||
      by_label_b.size() != b.labels.size()) {
    throw ValidationError("duplicate-node-rows", "score file repeats a node");
  }
  if (by_label_a.size() != by_label_b.size()) {
    throw ValidationError("mismatched-node-sets",
                          "score files cover different node sets");
  }
  const auto n = by_label_a.size();
  Eigen::VectorXd va(static_cast<Eigen::Index>(n));
  Eigen::VectorXd vb(static_cast<Eigen::Index>(n));
  Eigen::Index i = 0;
  for (const auto& [label, score] : by_label_a) {
    const auto it = by_label_b.find(label);
    if (it == by_label_b.end()) {
      throw ValidationError("mismatched-node-sets",
                            "node '" + label + "' missing from " + path_b);
    }
    va[i] = score;
    vb[i] = it->second;
    ++i;
  }
  const double rho = spearman(va, vb);
  ordered_json report;
  report["nodes"] = n;
  report["spearman"] = rho;
  const auto ranking_a = rank_by_score(va);
  const auto ranking_b = rank_by_score(vb);
  for (int k : {1, 5, 10}) {
    report["top" + std::to_string(k) + "_overlap"] =
        top_k_overlap(ranking_a, ranking_b, k);
  }
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out_prefix.empty()) write_file(out_prefix + ".json", text);
  return 0;
}

int cmd_oracle_check(const RunManifest& m, const std::string& source_label,
                     const std::string& target_label, int cap,
                     size_t budget) {
  const Graph g = load_graph(m);
  if (m.betas.size() != 1) {
    throw ValidationError("single-beta-required",
                          "oracle-check takes exactly one --beta");
  }
  const double beta = m.betas[0];
  const int s = g.node_by_label(source_label);
  const int t = g.node_by_label(target_label);
  if (s < 0 || t < 0) {
    throw ValidationError("unknown-node",
                          "unknown node '" +
                              (s < 0 ? source_label : target_label) + "'");
  }
  const TransitionPolicy policy =
      transition_policy_from_string(m.transition_policy);

  OracleOptions options;
  options.path_budget = budget;
  const PathEnsemble ensemble = enumerate_paths(g, policy, s, t, cap, options);
  const OracleQuantities oracle = oracle_rsp_quantities(g, ensemble, beta);

  const TransitionModel model = reference_transitions(g, policy);
  const KilledWalkMatrix w = killed_transition_matrix(g, model, beta);
  const FundamentalSolve f = fundamental_matrix(w);
  const double z_closed = pair_partition_function(f, s, t);
  const PairFlowField flows = pair_edge_flows(g, f, w, s, t);

  double deviation = std::abs(z_closed - oracle.partition_estimate);
  deviation = std::max(
      deviation, (flows.node_visits - oracle.node_visit_estimates)
                     .cwiseAbs()
                     .maxCoeff());
  deviation = std::max(
      deviation,
      (flows.edge_flows - oracle.edge_flow_estimates).cwiseAbs().maxCoeff());

  const bool pass = deviation <= 1e-6;
  std::cout << "pair: " << source_label << " -> " << target_label << "\n"
            << "paths: " << ensemble.path_count() << " (cap " << cap << ")\n"
            << "partition closed-form: " << format_sig(z_closed)
            << " oracle: " << format_sig(oracle.partition_estimate) << "\n"
            << "last length-slice mass: " << format_sig(oracle.last_increment)
            << "\n"
            << "max deviation: " << format_sig(deviation) << "\n"
            << "status: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

const std::map<std::string, std::vector<std::string>> kColormaps = {
    {"blue-red",
     {"#4575b4", "#74add1", "#abd9e9", "#e0f3f8", "#ffffbf", "#fee090",
      "#fdae61", "#f46d43", "#d73027"}},
    {"greys",
     {"#ffffff", "#f0f0f0", "#d9d9d9", "#bdbdbd", "#969696", "#737373",
      "#525252", "#252525", "#000000"}},
};

int cmd_export_dot(const RunManifest& m, const std::string& scores_path,
                   const std::string& out_path, const std::string& colormap) {
  const Graph g = load_graph(m);
  const auto palette_it = kColormaps.find(colormap);
  if (palette_it == kColormaps.end()) {
    throw ValidationError("unknown-colormap",
                          "unknown colormap '" + colormap + "'");
  }
  const auto& palette = palette_it->second;
  const ScoreTable table = read_score_csv(scores_path);
  std::map<std::string, double> by_label;
  for (size_t i = 0; i < table.labels.size(); ++i) {
    by_label[table.labels[i]] = table.scores[i];
  }
  const int n = g.node_count();
  Eigen::VectorXd scores(n);
  for (int v = 0; v < n; ++v) {
    const auto it = by_label.find(g.label(v));
    if (it == by_label.end()) {
      throw ValidationError("missing-node-scores",
                            "score file lacks node '" + g.label(v) + "'");
    }
    scores[v] = it->second;
  }

  // Quantile bin per node from its tie-averaged ascending rank.
  std::vector<int> bins(static_cast<size_t>(n), 0);
  {
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return scores[x] < scores[y]; });
    int i = 0;
    while (i < n) {
      int j = i;
      while (j + 1 < n &&
             scores[order[static_cast<size_t>(j + 1)]] ==
                 scores[order[static_cast<size_t>(i)]]) {
        ++j;
      }
      const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
      const int bin = std::min(
          8, static_cast<int>(std::floor(avg_rank / static_cast<double>(n) *
                                         9.0)));
      for (int k = i; k <= j; ++k) {
        bins[static_cast<size_t>(order[static_cast<size_t>(k)])] = bin;
      }
      i = j + 1;
    }
  }

  std::ostringstream dot;
  const bool directed = !g.declared_undirected();
  dot << (directed ? "digraph" : "graph") << " scores {\n";
  dot << "  node [style=filled];\n";
  for (int v = 0; v < n; ++v) {
    dot << "  \"" << g.label(v) << "\" [fillcolor=\""
        << palette[static_cast<size_t>(bins[static_cast<size_t>(v)])]
        << "\"];\n";
  }
  if (directed) {
    for (const Arc& a : g.arcs()) {
      dot << "  \"" << g.label(a.src) << "\" -> \"" << g.label(a.dst)
          << "\";\n";
    }
  } else {
    for (const auto& [i2, j2] : g.undirected_edges()) {
      dot << "  \"" << g.label(i2) << "\" -- \"" << g.label(j2) << "\";\n";
    }
  }
  dot << "}\n";
  if (out_path.empty()) {
    std::cout << dot.str();
  } else {
    write_file(out_path, dot.str());
  }
  return 0;
}

int cmd_generate(const std::string& spec, uint64_t seed,
                 const std::string& out_path) {
  const Graph g = generate_graph(spec, seed);
  const std::string text = to_edge_list(g);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized-shortest-path betweenness toolkit"};
  app.require_subcommand(1);

  RunManifest manifest;
  std::string source_label, target_label;
  int cap = 30;
  size_t budget = OracleOptions{}.path_budget;
  std::string compare_a, compare_b;
  std::string scores_path, dot_out, colormap = "blue-red";
  std::string generate_spec, generate_out;

  auto add_graph_flags = [&](CLI::App* cmd) {
    cmd->add_option("--input", manifest.input, "edge-list file");
    cmd->add_option("--generate", manifest.generator,
                    "generator spec (path:N, cycle:N, complete:N, grid:WxH, "
                    "three-community, sbm:NA,NB,NC:PIN:PBRIDGE)");
    cmd->add_flag("--directed", manifest.directed,
                  "treat the edge list as directed");
    cmd->add_option("--cost", manifest.cost_policy,
                    "cost policy: column|reciprocal|unit");
    cmd->add_option("--policy", manifest.transition_policy,
                    "transition policy: weight|degree");
    cmd->add_option("--seed", manifest.seed, "seed for seeded generators");
    cmd->add_option("--threads", manifest.threads, "worker threads (1 = fully deterministic)");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute one measure");
  add_graph_flags(compute);
  compute->add_option("--measure", manifest.measure, "measure name")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  compute->add_option("--beta", manifest.betas, "inverse temperature");
  compute->add_option("--out", manifest.out_prefix,
                      "output prefix (writes PREFIX.csv and PREFIX.json)");

  CLI::App* sweep = app.add_subcommand("sweep", "compute across a beta grid");
  add_graph_flags(sweep);
  sweep->add_option("--measure", manifest.measure, "rsp or rsp-net")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  sweep->add_option("--beta", manifest.betas, "inverse temperatures")
      ->required();
  sweep->add_option("--group", manifest.group,
                    "node-list file; adds a mean-rank summary per beta");
  sweep->add_option("--out", manifest.out_prefix, "output prefix");

  CLI::App* compare = app.add_subcommand("compare", "rank agreement report");
  compare->add_option("file_a", compare_a, "first score CSV")->required();
  compare->add_option("file_b", compare_b, "second score CSV")->required();
  compare->add_option("--out", manifest.out_prefix, "JSON report prefix");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "closed form vs. brute-force path enumeration");
  add_graph_flags(oracle);
  oracle->add_option("--source", source_label, "source node id")->required();
  oracle->add_option("--target", target_label, "target node id")->required();
  oracle->add_option("--beta", manifest.betas, "inverse temperature")
      ->required();
  oracle->add_option("--cap", cap, "maximum path length in edges");
  oracle->add_option("--budget", budget, "maximum enumerated paths");

  CLI::App* dot = app.add_subcommand("export-dot",
                                     "DOT document with quantile coloring");
  add_graph_flags(dot);
  dot->add_option("--scores", scores_path, "score CSV")->required();
  dot->add_option("--out", dot_out, "output DOT path (stdout when absent)");
  dot->add_option("--colormap", colormap, "blue-red (default) or greys");

  CLI::App* generate =
      app.add_subcommand("generate", "write a fixture as an edge list");
  generate->add_option("spec", generate_spec, "generator spec")->required();
  generate->add_option("--seed", manifest.seed, "seed for seeded generators");
  generate->add_option("--out", generate_out,
                       "output path (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) {
      manifest.command = "compute";
      return cmd_compute(manifest);
    }
    if (sweep->parsed()) {
      manifest.command = "sweep";
      return cmd_sweep(manifest);
    }
    if (compare->parsed()) {
      return cmd_compare(compare_a, compare_b, manifest.out_prefix);
    }
    if (oracle->parsed()) {
      manifest.command = "oracle-check";
      return cmd_oracle_check(manifest, source_label, target_label, cap,
                              budget);
    }
    if (dot->parsed()) {
      manifest.command = "export-dot";
      return cmd_export_dot(manifest, scores_path, dot_out, colormap);
    }
    if (generate->parsed()) {
      return cmd_generate(generate_spec, manifest.seed, generate_out);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.reason() << ": " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.reason() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
