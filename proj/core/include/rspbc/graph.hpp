#ifndef RSPBC_GRAPH_HPP
#define RSPBC_GRAPH_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rspbc/errors.hpp"

namespace rspbc {

// One directed arc. Undirected edges are stored as two opposite arcs with
// identical weight and cost, so every downstream formula sees the directed
// form uniformly.
struct Arc {
  int src = 0;
  int dst = 0;
  double weight = 1.0;  // affinity a_ij > 0, drives transition probabilities
  double cost = 1.0;    // c_ij >= 0, drives path optimality
};

class Graph {
 public:
  Graph(std::vector<std::string> labels, std::vector<Arc> arcs,
        bool declared_undirected);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool declared_undirected() const { return undirected_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int k) const { return arcs_[static_cast<size_t>(k)]; }

  // Indices into arcs() of the arcs leaving `node`.
  const std::vector<int>& out_arcs(int node) const {
    return out_[static_cast<size_t>(node)];
  }
  int out_degree(int node) const {
    return static_cast<int>(out_[static_cast<size_t>(node)].size());
  }
  double out_strength(int node) const;

  // Arc index of (src,dst), or -1 when absent.
  int arc_index(int src, int dst) const;
  bool has_arc(int src, int dst) const { return arc_index(src, dst) >= 0; }

  // External labels, insertion order == internal id order.
  const std::string& label(int node) const {
    return labels_[static_cast<size_t>(node)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  // Internal id of an external label, or -1 when unknown.
  int node_by_label(const std::string& label) const;

  // Pairs (i,j) with i < j, one per stored undirected edge. Only meaningful
  // for graphs declared undirected.
  std::vector<std::pair<int, int>> undirected_edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::unordered_map<std::string, int> label_index_;
  std::unordered_map<long long, int> arc_index_;
  bool undirected_ = false;
};

// Incremental builder used by the edge-list loader and the generators.
// Nodes are assigned contiguous ids in first-seen order.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool undirected) : undirected_(undirected) {}

  // Returns the id for `label`, creating it on first use.
  int ensure_node(const std::string& label);

  // Adds an edge between external labels. For an undirected builder the
  // opposite arc is stored automatically. Throws ValidationError on
  // self-loops, nonpositive weights, negative/non-finite costs and
  // duplicate arcs.
  void add_edge(const std::string& src, const std::string& dst, double weight,
                double cost);

  Graph build();

 private:
  void add_arc(int src, int dst, double weight, double cost);

  bool undirected_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_index_;
  std::vector<Arc> arcs_;
  std::unordered_map<long long, int> arc_seen_;
};

struct ComponentReport {
  int count = 0;
  std::vector<int> membership;  // component id per node, 0-based
};

// Exact strongly-connected-component decomposition (Tarjan). Reporting
// only; RSP operations require count == 1 and check it themselves.
ComponentReport check_strong_connectivity(const Graph& g);

}  // namespace rspbc

#endif
