#ifndef RSPBC_EDGE_LIST_HPP
#define RSPBC_EDGE_LIST_HPP

#include <string>
#include <string_view>

#include "rspbc/graph.hpp"

namespace rspbc {

// How edge costs are derived when loading an edge list.
enum class CostPolicy {
  kExplicitColumn,     // fourth column required on every row
  kReciprocalWeight,   // c_ij = 1 / a_ij
  kUnit,               // c_ij = 1
};

std::string to_string(CostPolicy p);
CostPolicy cost_policy_from_string(const std::string& s);

// Parses the plain edge-list format: one arc/edge per line,
// whitespace-separated fields `src dst weight [cost]`, `#` comment lines
// ignored. External node ids are arbitrary tokens and are remapped to
// contiguous internal ids in first-seen order.
Graph load_edge_list(std::string_view text, bool directed, CostPolicy policy);

// Same format, read from disk.
Graph load_edge_list_file(const std::string& path, bool directed,
                          CostPolicy policy);

// Writes a graph back out in the same format (one line per undirected edge
// for graphs declared undirected, one per arc otherwise). Weights and costs
// are emitted with enough digits to round-trip.
std::string to_edge_list(const Graph& g);

}  // namespace rspbc

#endif
