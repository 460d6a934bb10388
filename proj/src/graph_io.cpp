#include "zsflow/graph_io.hpp"

#include <sstream>
#include <vector>

namespace zsflow {

namespace {

// Content lines, comments and blanks stripped.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

long long parse_integer(std::istringstream& in, const std::string& what) {
  long long v;
  if (!(in >> v)) throw FormatError("expected " + what);
  return v;
}

void expect_line_end(std::istringstream& in, const std::string& where) {
  std::string rest;
  if (in >> rest) throw FormatError("trailing content on " + where + ": '" + rest + "'");
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty graph file");

  std::istringstream header(lines[0]);
  std::string magic;
  header >> magic;
  if (magic != "zs") throw FormatError("malformed header: expected 'zs <n> <m>'");
  long long n = parse_integer(header, "vertex count");
  long long m = parse_integer(header, "edge count");
  expect_line_end(header, "header");
  if (n < 0 || m < 0) throw FormatError("malformed header: negative count");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw FormatError("edge count mismatch: header says " + std::to_string(m) + ", file has " +
                      std::to_string(lines.size() - 1) + " edge lines");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream es(lines[i]);
    long long u = parse_integer(es, "edge endpoint");
    long long v = parse_integer(es, "edge endpoint");
    expect_line_end(es, "edge line " + std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw FormatError("vertex id out of range on edge line " + std::to_string(i));
    if (u == v) throw FormatError("loop edge on line " + std::to_string(i));
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "zs " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << g.edge(e).a << ' ' << g.edge(e).b << '\n';
  return out.str();
}

ParsedFlow parse_flow(const std::string& text, int expected_edges) {
  auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty flow file");

  std::istringstream header(lines[0]);
  std::string magic;
  header >> magic;
  if (magic != "flow") throw FormatError("malformed header: expected 'flow <k> <branch>'");
  ParsedFlow out;
  out.k = static_cast<int>(parse_integer(header, "flow bound"));
  if (!(header >> out.branch)) throw FormatError("malformed header: missing branch");
  expect_line_end(header, "header");
  if (out.k < 2) throw FormatError("flow bound must be at least 2");

  if (expected_edges >= 0 && static_cast<long long>(lines.size()) - 1 != expected_edges)
    throw FormatError("value count mismatch: expected " + std::to_string(expected_edges) +
                      " values, file has " + std::to_string(lines.size() - 1));

  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream vs(lines[i]);
    long long v = parse_integer(vs, "flow value");
    expect_line_end(vs, "value line " + std::to_string(i));
    if (v == 0) throw FormatError("zero flow value on line " + std::to_string(i));
    out.labeling.values.push_back(static_cast<int>(v));
  }
  return out;
}

std::string serialize_flow(const FlowCertificate& cert) {
  return serialize_flow_raw(cert.labeling, cert.bound, branch_name(cert.branch));
}

std::string serialize_flow_raw(const EdgeLabeling& f, int k, const std::string& branch) {
  std::ostringstream out;
  out << "flow " << k << ' ' << branch << '\n';
  for (int v : f.values) out << v << '\n';
  return out.str();
}

}  // namespace zsflow
