#ifndef RSPBC_GENERATORS_HPP
#define RSPBC_GENERATORS_HPP

#include <cstdint>

#include "rspbc/graph.hpp"

namespace rspbc {

// Three-block planted-partition spec: intra-block probability p_in, bridge
// probability between A-B and B-C, no A-C edges at all.
struct CommunitySpec {
  int size_a = 40;
  int size_b = 40;
  int size_c = 40;
  double p_in = 0.2;
  double p_bridge = 0.02;
  uint64_t seed = 0;
};

// The fixed 18-node 5-regular graph with three 6-node communities where the
// middle block touches both others and the outer blocks never touch. Built
// from three 6-cliques by removing one edge inside each block at every
// interface and adding the two cross links back; byte-stable across runs.
Graph three_community_regular();

// Seeded three-block graph; same seed gives the identical graph. Regenerates
// with incremented seeds (up to 100 attempts) until connected. Draws use
// mt19937_64 with 53-bit uniforms, so outputs are stable across platforms.
Graph sbm_three_block(const CommunitySpec& spec);

// Standard unit-weight, unit-cost undirected fixtures.
Graph grid_graph(int width, int height);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace rspbc

#endif
