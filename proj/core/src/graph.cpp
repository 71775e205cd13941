#include "rspbc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rspbc {

namespace {

long long arc_key(int src, int dst, int n) {
  return static_cast<long long>(src) * n + dst;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<Arc> arcs,
             bool declared_undirected)
    : labels_(std::move(labels)),
      arcs_(std::move(arcs)),
      undirected_(declared_undirected) {
  const int n = node_count();
  if (n <= 0) {
    throw ValidationError("empty-graph", "graph has no nodes");
  }
  out_.assign(static_cast<size_t>(n), {});
  label_index_.reserve(labels_.size());
  for (int i = 0; i < n; ++i) {
    if (!label_index_.emplace(labels_[static_cast<size_t>(i)], i).second) {
      throw ValidationError("duplicate-label",
                            "duplicate node label '" +
                                labels_[static_cast<size_t>(i)] + "'");
    }
  }
  arc_index_.reserve(arcs_.size());
  for (int k = 0; k < arc_count(); ++k) {
    const Arc& a = arcs_[static_cast<size_t>(k)];
    if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n) {
      throw ValidationError("arc-out-of-range", "arc endpoint out of range");
    }
    if (a.src == a.dst) {
      throw ValidationError("self-loop", "self-loop on node '" +
                                             labels_[static_cast<size_t>(a.src)] +
                                             "'");
    }
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw ValidationError("nonpositive-weight",
                            "arc weight must be a positive finite real");
    }
    if (a.cost < 0.0 || !std::isfinite(a.cost)) {
      throw ValidationError("negative-cost",
                            "arc cost must be a nonnegative finite real");
    }
    if (!arc_index_.emplace(arc_key(a.src, a.dst, n), k).second) {
      throw ValidationError("duplicate-arc",
                            "duplicate arc " + labels_[static_cast<size_t>(a.src)] +
                                " -> " + labels_[static_cast<size_t>(a.dst)]);
    }
    out_[static_cast<size_t>(a.src)].push_back(k);
  }
  if (undirected_) {
    for (const Arc& a : arcs_) {
      const int mirror = arc_index(a.dst, a.src);
      if (mirror < 0) {
        throw ValidationError("missing-mirror-arc",
                              "undirected graph lacks the opposite arc of " +
                                  labels_[static_cast<size_t>(a.src)] + " -> " +
                                  labels_[static_cast<size_t>(a.dst)]);
      }
      const Arc& b = arcs_[static_cast<size_t>(mirror)];
      if (b.weight != a.weight || b.cost != a.cost) {
        throw ValidationError("asymmetric-undirected-edge",
                              "opposite arcs of an undirected edge must carry "
                              "identical weight and cost");
      }
    }
  }
}

double Graph::out_strength(int node) const {
  double s = 0.0;
  for (int k : out_[static_cast<size_t>(node)]) {
    s += arcs_[static_cast<size_t>(k)].weight;
  }
  return s;
}

int Graph::arc_index(int src, int dst) const {
  auto it = arc_index_.find(arc_key(src, dst, node_count()));
  return it == arc_index_.end() ? -1 : it->second;
}

int Graph::node_by_label(const std::string& label) const {
  auto it = label_index_.find(label);
  return it == label_index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> Graph::undirected_edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(arcs_.size() / 2);
  for (const Arc& a : arcs_) {
    if (a.src < a.dst) edges.emplace_back(a.src, a.dst);
  }
  return edges;
}

int GraphBuilder::ensure_node(const std::string& label) {
  auto it = label_index_.find(label);
  if (it != label_index_.end()) return it->second;
  const int id = static_cast<int>(labels_.size());
  labels_.push_back(label);
  label_index_.emplace(label, id);
  return id;
}

void GraphBuilder::add_arc(int src, int dst, double weight, double cost) {
  const long long key =
      static_cast<long long>(src) * (1LL << 31) + dst;
  if (!arc_seen_.emplace(key, static_cast<int>(arcs_.size())).second) {
    throw ValidationError("duplicate-arc",
                          "duplicate arc " + labels_[static_cast<size_t>(src)] +
                              " -> " + labels_[static_cast<size_t>(dst)]);
  }
  arcs_.push_back(Arc{src, dst, weight, cost});
}

void GraphBuilder::add_edge(const std::string& src, const std::string& dst,
                            double weight, double cost) {
  if (src == dst) {
    throw ValidationError("self-loop", "self-loop on node '" + src + "'");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ValidationError("nonpositive-weight",
                          "edge weight must be a positive finite real");
  }
  if (cost < 0.0 || !std::isfinite(cost)) {
    throw ValidationError("negative-cost",
                          "edge cost must be a nonnegative finite real");
  }
  const int u = ensure_node(src);
  const int v = ensure_node(dst);
  add_arc(u, v, weight, cost);
  if (undirected_) add_arc(v, u, weight, cost);
}

Graph GraphBuilder::build() {
  return Graph(labels_, arcs_, undirected_);
}

ComponentReport check_strong_connectivity(const Graph& g) {
  const int n = g.node_count();
  // Iterative Tarjan; recursion would overflow on long paths.
  std::vector<int> index(static_cast<size_t>(n), -1);
  std::vector<int> lowlink(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  std::vector<int> membership(static_cast<size_t>(n), -1);
  int next_index = 0;
  int components = 0;

  struct Frame {
    int node;
    size_t arc_pos;
  };
  std::vector<Frame> call_stack;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    call_stack.push_back({root, 0});
    index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] =
        next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = true;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const int v = frame.node;
      const auto& out = g.out_arcs(v);
      if (frame.arc_pos < out.size()) {
        const int w = g.arc(out[frame.arc_pos]).dst;
        ++frame.arc_pos;
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] =
              next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          lowlink[static_cast<size_t>(v)] = std::min(
              lowlink[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
        }
      } else {
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const int parent = call_stack.back().node;
          lowlink[static_cast<size_t>(parent)] =
              std::min(lowlink[static_cast<size_t>(parent)],
                       lowlink[static_cast<size_t>(v)]);
        }
        if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = false;
            membership[static_cast<size_t>(w)] = components;
            if (w == v) break;
          }
          ++components;
        }
      }
    }
  }
  return ComponentReport{components, std::move(membership)};
}

}  // namespace rspbc
