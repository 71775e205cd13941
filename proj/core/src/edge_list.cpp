#include "rspbc/edge_list.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace rspbc {

std::string to_string(CostPolicy p) {
  switch (p) {
    case CostPolicy::kExplicitColumn: return "column";
    case CostPolicy::kReciprocalWeight: return "reciprocal";
    case CostPolicy::kUnit: return "unit";
  }
  return "unit";
}

CostPolicy cost_policy_from_string(const std::string& s) {
  if (s == "column") return CostPolicy::kExplicitColumn;
  if (s == "reciprocal") return CostPolicy::kReciprocalWeight;
  if (s == "unit") return CostPolicy::kUnit;
  throw ValidationError("unknown-cost-policy",
                        "unknown cost policy '" + s +
                            "' (expected column|reciprocal|unit)");
}

namespace {

[[noreturn]] void malformed(int line_no, const std::string& why) {
  throw ValidationError("malformed-row", "line " + std::to_string(line_no) +
                                             ": " + why);
}

double parse_real(const std::string& token, int line_no, const char* what) {
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    malformed(line_no, std::string("cannot parse ") + what + " '" + token + "'");
  }
  if (pos != token.size()) {
    malformed(line_no, std::string("trailing characters in ") + what + " '" +
                           token + "'");
  }
  return value;
}

}  // namespace

Graph load_edge_list(std::string_view text, bool directed, CostPolicy policy) {
  GraphBuilder builder(!directed);
  std::istringstream input{std::string(text)};
  std::string line;
  int line_no = 0;
  int edges = 0;
  while (std::getline(input, line)) {
    ++line_no;
    std::istringstream row(line);
    std::vector<std::string> fields;
    std::string tok;
    while (row >> tok) fields.push_back(tok);
    if (fields.empty() || fields[0][0] == '#') continue;
    const size_t expected = policy == CostPolicy::kExplicitColumn ? 4 : 3;
    if (fields.size() < expected) {
      malformed(line_no,
                policy == CostPolicy::kExplicitColumn && fields.size() == 3
                    ? "cost column required under the explicit-column policy"
                    : "expected `src dst weight" +
                          std::string(expected == 4 ? " cost`" : "`"));
    }
    if (fields.size() > expected) {
      malformed(line_no, "unexpected extra field '" + fields[expected] + "'");
    }
    const double weight = parse_real(fields[2], line_no, "weight");
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw ValidationError("nonpositive-weight",
                            "line " + std::to_string(line_no) +
                                ": weight must be positive and finite");
    }
    double cost = 1.0;
    switch (policy) {
      case CostPolicy::kExplicitColumn:
        cost = parse_real(fields[3], line_no, "cost");
        if (cost < 0.0 || !std::isfinite(cost)) {
          throw ValidationError("negative-cost",
                                "line " + std::to_string(line_no) +
                                    ": cost must be nonnegative and finite");
        }
        break;
      case CostPolicy::kReciprocalWeight:
        cost = 1.0 / weight;
        break;
      case CostPolicy::kUnit:
        cost = 1.0;
        break;
    }
    try {
      builder.add_edge(fields[0], fields[1], weight, cost);
    } catch (const ValidationError& e) {
      throw ValidationError(e.reason(), "line " + std::to_string(line_no) +
                                            ": " + e.what());
    }
    ++edges;
  }
  if (edges == 0) {
    throw ValidationError("empty-graph", "edge list contains no edges");
  }
  return builder.build();
}

Graph load_edge_list_file(const std::string& path, bool directed,
                          CostPolicy policy) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("input-not-found", "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str(), directed, policy);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  char num[64];
  auto put = [&](double v) {
    std::snprintf(num, sizeof(num), "%.17g", v);
    out << num;
  };
  auto emit = [&](const Arc& a) {
    out << g.label(a.src) << ' ' << g.label(a.dst) << ' ';
    put(a.weight);
    out << ' ';
    put(a.cost);
    out << '\n';
  };
  if (g.declared_undirected()) {
    for (const Arc& a : g.arcs()) {
      if (a.src < a.dst) emit(a);
    }
  } else {
    for (const Arc& a : g.arcs()) emit(a);
  }
  return out.str();
}

}  // namespace rspbc
