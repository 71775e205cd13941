#include "rspbc/generators.hpp"

#include <random>
#include <string>

namespace rspbc {

namespace {

std::string node_label(int i) { return std::to_string(i + 1); }

// 53-bit uniform in [0,1); independent of the (unspecified) stdlib
// distribution implementations so seeded graphs are portable.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void add_unit_edge(GraphBuilder& b, int i, int j) {
  b.add_edge(node_label(i), node_label(j), 1.0, 1.0);
}

}  // namespace

Graph three_community_regular() {
  // Blocks A = {0..5}, B = {6..11}, C = {12..17}, each a 6-clique, then one
  // rewiring per interface: drop edge (0,1) in A and (6,7) in B, add the
  // bridges (0,6) and (1,7); drop (8,9) in B and (12,13) in C, add (8,12)
  // and (9,13). Every touched node loses one inside edge and gains one
  // bridge, so the graph stays 5-regular.
  GraphBuilder b(true);
  for (int i = 0; i < 18; ++i) b.ensure_node(node_label(i));
  auto skip = [](int i, int j) {
    return (i == 0 && j == 1) || (i == 6 && j == 7) || (i == 8 && j == 9) ||
           (i == 12 && j == 13);
  };
  for (int block = 0; block < 3; ++block) {
    const int base = block * 6;
    for (int i = base; i < base + 6; ++i) {
      for (int j = i + 1; j < base + 6; ++j) {
        if (!skip(i, j)) add_unit_edge(b, i, j);
      }
    }
  }
  add_unit_edge(b, 0, 6);
  add_unit_edge(b, 1, 7);
  add_unit_edge(b, 8, 12);
  add_unit_edge(b, 9, 13);
  return b.build();
}

Graph sbm_three_block(const CommunitySpec& spec) {
  if (spec.size_a < 1 || spec.size_b < 1 || spec.size_c < 1) {
    throw ValidationError("invalid-community-spec", "block sizes must be >= 1");
  }
  if (!(spec.p_bridge > 0.0) || !(spec.p_bridge < spec.p_in) ||
      !(spec.p_in <= 1.0)) {
    throw ValidationError("invalid-community-spec",
                          "community spec requires 0 < p_bridge < p_in <= 1");
  }
  const int n = spec.size_a + spec.size_b + spec.size_c;
  const int a_end = spec.size_a;
  const int b_end = spec.size_a + spec.size_b;
  auto block_of = [&](int v) { return v < a_end ? 0 : (v < b_end ? 1 : 2); };

  for (uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng(spec.seed + attempt);
    GraphBuilder b(true);
    for (int i = 0; i < n; ++i) b.ensure_node(node_label(i));
    int edges = 0;
    // Fixed draw order over the upper triangle keeps seeds reproducible.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int bi = block_of(i);
        const int bj = block_of(j);
        double p = 0.0;
        if (bi == bj) {
          p = spec.p_in;
        } else if ((bi == 0 && bj == 1) || (bi == 1 && bj == 2)) {
          p = spec.p_bridge;
        }  // A-C stays 0
        if (p > 0.0 && uniform01(rng) < p) {
          add_unit_edge(b, i, j);
          ++edges;
        }
      }
    }
    if (edges == 0) continue;
    Graph g = b.build();
    if (check_strong_connectivity(g).count == 1) return g;
  }
  throw ValidationError("disconnected-community-graph",
                        "no connected graph found in 100 seeded attempts");
}

Graph grid_graph(int width, int height) {
  if (width < 1 || height < 1) {
    throw ValidationError("invalid-dimensions", "grid dimensions must be >= 1");
  }
  if (width * height < 2) {
    throw ValidationError("invalid-dimensions",
                          "grid must contain at least two nodes");
  }
  GraphBuilder b(true);
  auto id = [&](int x, int y) { return y * width + x; };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) b.ensure_node(node_label(id(x, y)));
  }
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x + 1 < width) add_unit_edge(b, id(x, y), id(x + 1, y));
      if (y + 1 < height) add_unit_edge(b, id(x, y), id(x, y + 1));
    }
  }
  return b.build();
}

Graph path_graph(int n) {
  if (n < 2) {
    throw ValidationError("invalid-dimensions", "path needs >= 2 nodes");
  }
  GraphBuilder b(true);
  for (int i = 0; i < n; ++i) b.ensure_node(node_label(i));
  for (int i = 0; i + 1 < n; ++i) add_unit_edge(b, i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw ValidationError("invalid-dimensions", "cycle needs >= 3 nodes");
  }
  GraphBuilder b(true);
  for (int i = 0; i < n; ++i) b.ensure_node(node_label(i));
  for (int i = 0; i < n; ++i) add_unit_edge(b, i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  if (n < 2) {
    throw ValidationError("invalid-dimensions",
                          "complete graph needs >= 2 nodes");
  }
  GraphBuilder b(true);
  for (int i = 0; i < n; ++i) b.ensure_node(node_label(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) add_unit_edge(b, i, j);
  }
  return b.build();
}

}  // namespace rspbc
