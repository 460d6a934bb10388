// Command-line front end: solve / verify / gen / oracle over the text
// formats in graph_io. Exit codes: 0 ok or found, 1 violation or none,
// 2 usage or format errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zsflow/generator.hpp"
#include "zsflow/graph_io.hpp"
#include "zsflow/multigraph.hpp"
#include "zsflow/oracle.hpp"
#include "zsflow/solver.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zsflow::FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw zsflow::FormatError("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum 6-flow construction on 5-regular multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, flow_path, out_path;
  int verify_k = 0;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  int oracle_k = 6;
  long long oracle_budget = 100'000'000;

  auto* solve_cmd = app.add_subcommand("solve", "construct a certified zero-sum 6-flow");
  solve_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  solve_cmd->add_option("-o,--output", out_path, "write the flow here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check a flow against a graph");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("flow", flow_path)->required();
  verify_cmd->add_option("-k", verify_k, "flow bound (default: the flow file's header)");

  auto* gen_cmd = app.add_subcommand("gen", "generate a random 5-regular multigraph");
  gen_cmd->add_option("-n", gen_n, "vertex count (even)")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
  gen_cmd->add_option("-o,--output", out_path);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive zero-sum k-flow search");
  oracle_cmd->add_option("graph", graph_path)->required();
  oracle_cmd->add_option("-k", oracle_k, "flow bound");
  oracle_cmd->add_option("--budget", oracle_budget, "search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) {
      zsflow::Multigraph g = zsflow::parse_graph(read_input(graph_path));
      zsflow::FlowCertificate cert = zsflow::solve(g);
      write_output(out_path, zsflow::serialize_flow(cert));
      std::cerr << "solved: branch=" << zsflow::branch_name(cert.branch) << " n="
                << g.vertex_count() << " m=" << g.edge_count() << " "
                << cert.diagnostics.summary() << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      zsflow::Multigraph g = zsflow::parse_graph(read_input(graph_path));
      zsflow::ParsedFlow flow = zsflow::parse_flow(read_input(flow_path), g.edge_count());
      int k = verify_k > 0 ? verify_k : flow.k;
      auto report = zsflow::verify(g, flow.labeling, k);
      if (report.ok) {
        std::cout << "ok\n";
        return 0;
      }
      std::cout << "violation: " << report.violation << "\n";
      return 1;
    }
    if (gen_cmd->parsed()) {
      zsflow::GeneratorConfig cfg;
      cfg.vertex_count = gen_n;
      cfg.seed = gen_seed;
      zsflow::Multigraph g = zsflow::gen_random_5regular(cfg);
      write_output(out_path, zsflow::serialize_graph(g));
      return 0;
    }
    if (oracle_cmd->parsed()) {
      zsflow::Multigraph g = zsflow::parse_graph(read_input(graph_path));
      auto outcome = zsflow::brute_force_flow(g, oracle_k, oracle_budget);
      std::cerr << "nodes=" << outcome.nodes_explored
                << (outcome.budget_exhausted ? " budget-exhausted" : "") << "\n";
      if (outcome.found()) {
        std::cout << zsflow::serialize_flow_raw(*outcome.labeling, oracle_k, "oracle");
        return 0;
      }
      std::cout << (outcome.budget_exhausted ? "budget-exhausted\n" : "none\n");
      return 1;
    }
  } catch (const zsflow::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
