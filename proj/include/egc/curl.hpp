#pragma once

#include <optional>
#include <vector>

#include "egc/graph.hpp"

namespace egc {

/// Sum of directed weights around a cycle, wrap-around edge included.
/// Expert graphs keep this strictly between 1 and length-1 on every cycle.
Scalar curl(const ExpertGraph& g, const Cycle& c);

/// Sum of directed weights along an open path; a single vertex has weight 0.
Scalar path_weight(const ExpertGraph& g, const Path& b);

struct CurlReport {
  /// Strict condition: every cycle of length l >= 3 has 1 < curl < l-1.
  bool consistent = true;
  /// True when the minimum cycle curl is exactly 1 (the non-strict bound that
  /// linear ordering graphs are allowed to meet).
  bool boundary = false;
  /// Exact minimum over all simple directed cycles of length >= 3, when any
  /// exist.
  std::optional<Scalar> min_cycle_curl;
  /// A violating cycle (curl <= 1), canonical rotation; present iff not
  /// consistent.
  std::optional<Cycle> witness;
  std::optional<Scalar> witness_curl;
};

/// Decides curl consistency from the minimum-weight directed cycle. For each
/// directed edge v->u a shortest u~>v path is computed with the single edge
/// u->v removed, so two-cycles from one pair's orientations never enter the
/// minimum and the reported value is the exact minimum over simple cycles.
/// The upper curl bound needs no separate pass: a cycle close to l-1 is a
/// reversed cycle close to 1, and the bidirected view contains both.
CurlReport check_curl_consistency(const ExpertGraph& g);

/// Exhaustive enumeration of simple directed cycles of length >= 3 in the
/// bidirected view, both directions, each in canonical rotation. Test oracle
/// for check_curl_consistency; refuses graphs above the vertex bound.
std::vector<Cycle> enumerate_cycles(const ExpertGraph& g, int vertex_bound = 9);

/// p_i / (p_i + sum of the others): a 1-vs-(k-1) opinion.
Scalar multiway_opinion(const std::vector<Scalar>& p, ClassId i, const std::vector<ClassId>& others);

/// Expected multiway curl of the cyclic index sequence with a sliding window
/// of the given size: for each position, the opinion of that class against
/// the next window-1 classes around the cycle, summed, then averaged over
/// states. Equals exactly 1 when window == length; strictly inside
/// (1, length-window+1) otherwise.
Scalar multiway_curl(const ProbabilityTable& table, const std::vector<ClassId>& cycle, int window);

}  // namespace egc
