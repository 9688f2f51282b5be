#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egc/cli.hpp"
#include "egc/errors.hpp"

namespace {

struct Options {
  std::string file;
  std::string from, to;
  std::string zeta = "1/100";
  std::string epsilon = "1/50";
  std::string method = "auto";
  int window = 3;
  std::optional<std::string> output;
  std::optional<std::string> cycle;
  std::vector<std::string> pairs;
};

std::pair<std::string, std::string> split_pair(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    egc::fail(egc::Errc::parse_error, "pair must look like FROM:TO, got '" + text + "'");
  return {text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expert-graph calculus: curl consistency, synthetic experts, and\n"
               "ranking-mixture conversions for pairwise expert graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "curl-consistency verdict for a graph file");
  check->add_option("graph", opt.file, "graph JSON file")->required();

  auto* bounds = app.add_subcommand("bounds", "feasible interval for a missing edge");
  bounds->add_option("graph", opt.file, "graph JSON file")->required();
  bounds->add_option("--from", opt.from, "source vertex label")->required();
  bounds->add_option("--to", opt.to, "target vertex label")->required();

  auto* synthesize =
      app.add_subcommand("synthesize", "assign midpoints to missing edges, in order");
  synthesize->add_option("graph", opt.file, "graph JSON file")->required();
  synthesize->add_option("--pair", opt.pairs, "missing pair FROM:TO (repeatable)")->required();
  synthesize->add_option("--output", opt.output, "write the extended graph here");

  auto* gadget = app.add_subcommand("gadget", "zeta-accurate synthetic-expert gadget graph");
  gadget->add_option("graph", opt.file, "graph JSON file")->required();
  gadget->add_option("--zeta", opt.zeta, "interval width (rational), default 1/100");
  gadget->add_option("--output", opt.output, "write the gadget graph here");

  auto* t2g = app.add_subcommand("table-to-graph", "expert graph generated by a probability table");
  t2g->add_option("table", opt.file, "table JSON file")->required();
  t2g->add_option("--output", opt.output, "write the graph here");

  auto* g2r = app.add_subcommand("graph-to-rankings",
                                 "ranking distribution generating a table's expert graph");
  g2r->add_option("table", opt.file, "table JSON file")->required();
  g2r->add_option("--output", opt.output, "write the ranking distribution here");

  auto* r2t = app.add_subcommand("rankings-to-table",
                                 "probability table approximating a ranking distribution");
  r2t->add_option("rankings", opt.file, "ranking distribution JSON file")->required();
  r2t->add_option("--epsilon", opt.epsilon, "per-edge accuracy (rational), default 1/50");
  r2t->add_option("--output", opt.output, "write the table here");

  auto* decomp = app.add_subcommand("decompose-cycle",
                                    "convex decomposition of cycle weights into orientations");
  decomp->add_option("cycle", opt.file, "cycle weights JSON file")->required();
  decomp->add_option("--output", opt.output, "write the decomposition here");

  auto* membership =
      app.add_subcommand("membership", "linear-ordering-polytope membership verdict");
  membership->add_option("graph", opt.file, "graph JSON file")->required();
  membership->add_option("--method", opt.method, "auto | curl | exact (default auto)");

  auto* multiway = app.add_subcommand("multiway-curl", "expected 1-vs-(k-1) curl of a cycle");
  multiway->add_option("table", opt.file, "table JSON file")->required();
  multiway->add_option("--window", opt.window, "window size k >= 3")->required();
  multiway->add_option("--cycle", opt.cycle, "comma-separated class labels (default: all)");

  app.add_subcommand("condorcet-demo",
                     "three calibrated experts forming a preference cycle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    egc::cli::CommandResult result;
    if (check->parsed()) result = egc::cli::cmd_check(opt.file);
    if (bounds->parsed()) result = egc::cli::cmd_bounds(opt.file, opt.from, opt.to);
    if (synthesize->parsed()) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& p : opt.pairs) pairs.push_back(split_pair(p));
      result = egc::cli::cmd_synthesize(opt.file, pairs, opt.output);
    }
    if (gadget->parsed()) result = egc::cli::cmd_gadget(opt.file, opt.zeta, opt.output);
    if (t2g->parsed()) result = egc::cli::cmd_table_to_graph(opt.file, opt.output);
    if (g2r->parsed()) result = egc::cli::cmd_graph_to_rankings(opt.file, opt.output);
    if (r2t->parsed()) result = egc::cli::cmd_rankings_to_table(opt.file, opt.epsilon, opt.output);
    if (decomp->parsed()) result = egc::cli::cmd_decompose_cycle(opt.file, opt.output);
    if (membership->parsed()) result = egc::cli::cmd_membership(opt.file, opt.method);
    if (multiway->parsed()) result = egc::cli::cmd_multiway_curl(opt.file, opt.window, opt.cycle);
    if (app.get_subcommand("condorcet-demo")->parsed()) result = egc::cli::cmd_condorcet_demo();
    std::cout << result.output;
    return result.exit_code;
  } catch (const egc::Error& e) {
    std::cerr << "error (" << egc::to_string(e.code()) << "): " << e.what() << "\n";
    return e.is_parse_error() ? 2 : 1;
  }
}
