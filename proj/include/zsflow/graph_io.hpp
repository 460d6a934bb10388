#pragma once

#include <stdexcept>
#include <string>

#include "zsflow/multigraph.hpp"
#include "zsflow/solver.hpp"

namespace zsflow {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graph text format:
///   zs <n> <m>
///   <u> <v>        (m lines, 0-based ids; line order is edge identity)
/// Lines starting with '#' and blank lines are ignored on input and never
/// written. Serialized form is normalized: LF endings, single spaces, no
/// trailing whitespace. Loops are a format error.
Multigraph parse_graph(const std::string& text);
std::string serialize_graph(const Multigraph& g);

/// Flow text format:
///   flow <k> <branch>
///   <value>        (one signed integer per edge, in edge-id order)
struct ParsedFlow {
  int k = 0;
  std::string branch;
  EdgeLabeling labeling;
};

/// expected_edges >= 0 enforces the value count.
ParsedFlow parse_flow(const std::string& text, int expected_edges = -1);
std::string serialize_flow(const FlowCertificate& cert);
std::string serialize_flow_raw(const EdgeLabeling& f, int k, const std::string& branch);

}  // namespace zsflow
