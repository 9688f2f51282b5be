#include "egc/cli.hpp"

#include <sstream>

#include "egc/curl.hpp"
#include "egc/cycledecomp.hpp"
#include "egc/errors.hpp"
#include "egc/io.hpp"
#include "egc/synthesis.hpp"

namespace egc::cli {

namespace {

ExpertGraph load_graph(const std::string& path) {
  return parse_graph_document(read_text_file(path));
}

ProbabilityTable load_table(const std::string& path) {
  return parse_table_document(read_text_file(path));
}

ClassId resolve(const ExpertGraph& g, const std::string& label) {
  auto id = g.find_label(label);
  if (!id) fail(Errc::parse_error, "unknown vertex label '" + label + "'");
  return *id;
}

std::string cycle_str(const ExpertGraph& g, const Cycle& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ", ";
    out += g.label(c.vertices[i]);
  }
  return out + ")";
}

// Document-producing commands print the document unless --output redirects it.
void emit_document(std::ostringstream& out, const std::optional<std::string>& output_file,
                   const std::string& document) {
  if (output_file) {
    write_text_file(*output_file, document);
    out << "wrote " << *output_file << "\n";
  } else {
    out << document;
  }
}

ProbabilityTable condorcet_table() {
  Scalar small = Scalar::parse("0.01"), mid = Scalar::parse("0.09"), big = Scalar::parse("0.90");
  Scalar third(1, 3);
  return ProbabilityTable({"Y1", "Y2", "Y3"},
                          {{small, big, mid}, {mid, small, big}, {big, mid, small}},
                          {third, third, third});
}

}  // namespace

CommandResult cmd_check(const std::string& graph_file) {
  ExpertGraph g = load_graph(graph_file);
  CurlReport report = check_curl_consistency(g);
  std::ostringstream out;
  if (report.consistent) {
    if (report.min_cycle_curl)
      out << "consistent, min cycle curl " << *report.min_cycle_curl << "\n";
    else
      out << "consistent, no cycles\n";
    return {0, out.str()};
  }
  out << (report.boundary ? "boundary" : "inconsistent") << ", min cycle curl "
      << *report.min_cycle_curl << ", witness " << cycle_str(g, *report.witness) << "\n";
  return {1, out.str()};
}

CommandResult cmd_bounds(const std::string& graph_file, const std::string& from,
                         const std::string& to) {
  ExpertGraph g = load_graph(graph_file);
  ClassId i = resolve(g, from), j = resolve(g, to);
  OpenInterval bounds = synthetic_bounds(g, i, j);
  auto gap = zeta_accuracy(g, i, j);
  std::ostringstream out;
  out << "(" << bounds.lo << ", " << bounds.hi << "), gap ";
  if (gap)
    out << *gap;
  else
    out << "unbounded";
  out << "\n";
  return {0, out.str()};
}

CommandResult cmd_synthesize(const std::string& graph_file,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             const std::optional<std::string>& output_file) {
  ExpertGraph g = load_graph(graph_file);
  std::vector<std::pair<ClassId, ClassId>> resolved;
  for (const auto& [from, to] : pairs) resolved.emplace_back(resolve(g, from), resolve(g, to));
  SynthesisResult result = synthesize_edges(g, resolved);
  std::ostringstream out;
  for (const SynthesisStep& step : result.steps)
    out << "{" << result.graph.label(step.pair.first) << ", "
        << result.graph.label(step.pair.second) << "}: bounds (" << step.bounds.lo << ", "
        << step.bounds.hi << "), assigned " << step.chosen << "\n";
  emit_document(out, output_file, render_graph_document(result.graph));
  return {0, out.str()};
}

CommandResult cmd_gadget(const std::string& graph_file, const std::string& zeta,
                         const std::optional<std::string>& output_file) {
  ExpertGraph g = load_graph(graph_file);
  ExpertGraph gadget = build_zeta_gadget(g, Scalar::parse(zeta));
  std::ostringstream out;
  out << "gadget graph: " << gadget.vertex_count() << " vertices, " << gadget.edge_count()
      << " edges\n";
  emit_document(out, output_file, render_graph_document(gadget));
  return {0, out.str()};
}

CommandResult cmd_table_to_graph(const std::string& table_file,
                                 const std::optional<std::string>& output_file) {
  ProbabilityTable table = load_table(table_file);
  ExpertGraph g = build_expert_graph(table, all_pairs(table.class_count()));
  std::ostringstream out;
  emit_document(out, output_file, render_graph_document(g));
  return {0, out.str()};
}

CommandResult cmd_graph_to_rankings(const std::string& table_file,
                                    const std::optional<std::string>& output_file) {
  ProbabilityTable table = load_table(table_file);
  RankingDistribution w = expert_graph_to_log(table);
  std::ostringstream out;
  emit_document(out, output_file, render_rankings_document(w));
  return {0, out.str()};
}

CommandResult cmd_rankings_to_table(const std::string& rankings_file, const std::string& epsilon,
                                    const std::optional<std::string>& output_file) {
  RankingDistribution w = parse_rankings_document(read_text_file(rankings_file));
  ProbabilityTable table = log_to_expert_table(w, Scalar::parse(epsilon));
  std::ostringstream out;
  emit_document(out, output_file, render_table_document(table));
  return {0, out.str()};
}

CommandResult cmd_decompose_cycle(const std::string& cycle_file,
                                  const std::optional<std::string>& output_file) {
  std::vector<Scalar> weights = parse_cycle_weights_document(read_text_file(cycle_file));
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(weights, &trace);
  std::ostringstream out;
  if (trace.complemented) out << "decomposed through the complement vector\n";
  for (const DecompStep& step : trace.steps) {
    out << "pull z = " << step.z << " on support {";
    for (size_t i = 0; i < step.support.size(); ++i) {
      if (i) out << ", ";
      out << step.support[i];
    }
    out << "}" << (step.full_support ? " (full support, scaled ones)" : "") << ", remainder factor "
        << Scalar(1) - step.z << "\n";
  }
  if (!trace.finisher.empty()) {
    out << "finisher weights:";
    for (const Scalar& w : trace.finisher) out << " " << w;
    out << "\n";
  }
  out << d.terms.size() << " orientation terms\n";
  emit_document(out, output_file, render_decomposition_document(d));
  return {0, out.str()};
}

CommandResult cmd_membership(const std::string& graph_file, const std::string& method) {
  ExpertGraph g = load_graph(graph_file);
  MembershipMethod m;
  if (method == "auto")
    m = MembershipMethod::automatic;
  else if (method == "curl")
    m = MembershipMethod::curl_fast_path;
  else if (method == "exact")
    m = MembershipMethod::exact_feasibility;
  else
    fail(Errc::parse_error, "unknown membership method '" + method + "'");
  Membership verdict = membership_oracle(g, m);
  return {verdict == Membership::interior ? 0 : 1, std::string(to_string(verdict)) + "\n"};
}

CommandResult cmd_multiway_curl(const std::string& table_file, int window,
                                const std::optional<std::string>& cycle_csv) {
  ProbabilityTable table = load_table(table_file);
  std::vector<ClassId> cycle;
  if (cycle_csv) {
    std::istringstream ss(*cycle_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      bool found = false;
      for (int i = 0; i < table.class_count() && !found; ++i)
        if (table.class_labels()[i] == item) {
          cycle.push_back(i);
          found = true;
        }
      if (!found) fail(Errc::parse_error, "unknown class label '" + item + "'");
    }
  } else {
    for (int i = 0; i < table.class_count(); ++i) cycle.push_back(i);
  }
  Scalar value = multiway_curl(table, cycle, window);
  std::ostringstream out;
  int len = static_cast<int>(cycle.size());
  out << "multiway curl = " << value << " (cycle length " << len << ", window " << window << ")\n";
  if (len == window)
    out << "window covers the whole cycle: curl is exactly 1\n";
  else
    out << "bounds: strictly inside (1, " << len - window + 1 << ")\n";
  return {0, out.str()};
}

CommandResult cmd_condorcet_demo() {
  ProbabilityTable table = condorcet_table();
  ExpertGraph g = build_expert_graph(table, all_pairs(3));
  std::ostringstream out;
  out << "probability table (uniform state distribution):\n";
  for (StateId u = 0; u < table.state_count(); ++u) {
    out << "  u" << u + 1 << ":";
    for (const Scalar& v : table.row(u)) out << " " << v;
    out << "\n";
  }
  out << "pairwise overall opinions:\n";
  out << "  f(Y1, Y2) = " << g.weight(0, 1) << "\n";
  out << "  f(Y2, Y3) = " << g.weight(1, 2) << "\n";
  out << "  f(Y3, Y1) = " << g.weight(2, 0) << "\n";
  Cycle triangle{{0, 1, 2}};
  out << "curl(Y1, Y2, Y3) = " << curl(g, triangle) << ", inside (1, 2)\n";
  CurlReport report = check_curl_consistency(g);
  out << (report.consistent ? "consistent" : "inconsistent")
      << ", preference cycle present (all pairwise majorities > 1/2)\n";
  return {report.consistent ? 0 : 1, out.str()};
}

}  // namespace egc::cli
