#pragma once

#include <string>
#include <vector>

#include "egc/cycledecomp.hpp"
#include "egc/graph.hpp"
#include "egc/ordering.hpp"
#include "egc/table.hpp"

namespace egc {

/// JSON document formats. Rationals always serialize as strings ("3/8" or a
/// finite decimal on input, "a/b" on output), never floats. Every parser
/// throws parse_error with a field diagnostic; parse(render(x)) == x.
///
/// Graph:    {"vertices": ["s", ...], "edges": [{"from": "s", "to": "t", "weight": "3/10"}, ...]}
/// Table:    {"classes": ["Y1", ...], "states": [{"prob": "1/3", "p": ["1/100", ...]}, ...]}
/// Rankings: {"classes": ["Y1", ...], "rankings": [{"order": ["Y2", "Y1"], "weight": "1/2"}, ...]}
/// Cycle:    {"weights": ["1/4", "2/4", "3/4", "3/4"]}
/// Decomposition: {"length": 4, "terms": [{"orientation": [0, 1, 1, 1], "weight": "1/8"}, ...]}

ExpertGraph parse_graph_document(const std::string& text);
std::string render_graph_document(const ExpertGraph& g);

ProbabilityTable parse_table_document(const std::string& text);
std::string render_table_document(const ProbabilityTable& table);

RankingDistribution parse_rankings_document(const std::string& text);
std::string render_rankings_document(const RankingDistribution& w);

std::vector<Scalar> parse_cycle_weights_document(const std::string& text);
std::string render_cycle_weights_document(const std::vector<Scalar>& weights);

OrientationDecomposition parse_decomposition_document(const std::string& text);
std::string render_decomposition_document(const OrientationDecomposition& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace egc
