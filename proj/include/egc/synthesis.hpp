#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "egc/graph.hpp"

namespace egc {

/// Feasible range for a missing edge weight; both endpoints exclusive.
struct OpenInterval {
  Scalar lo;
  Scalar hi;
  Scalar width() const { return hi - lo; }
  bool contains(const Scalar& v) const { return lo < v && v < hi; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Curl-consistency bounds for the absent pair {i, j}:
///   upper = minimum path weight over i ~> j paths,
///   lower = 1 - minimum path weight over j ~> i paths,
/// intersected with the open unit interval. A direction with no connecting
/// path contributes its trivial bound (0 or 1) rather than an error.
OpenInterval synthetic_bounds(const ExpertGraph& g, ClassId i, ClassId j);

/// Width of the unclamped feasible interval: W(shortest i~>j) +
/// W(shortest j~>i) - 1, which is also (minimum cycle curl through i and j)
/// minus 1. nullopt when no cycle through the pair exists; the synthetic
/// expert is zeta-accurate iff this value is <= zeta.
std::optional<Scalar> zeta_accuracy(const ExpertGraph& g, ClassId i, ClassId j);

/// Builds a graph on the original vertices plus two fresh vertices per
/// original edge and none of the original edges: each edge (i, j) of weight f
/// becomes a two-leg path i -> [ij] -> j of total weight f + zeta/2 and a
/// reverse path j -> [ji] -> i of total weight 1 - f + zeta/2. In the result
/// every original pair is a synthetic expert with a feasible interval of
/// width exactly zeta containing the original weight, and the result is curl
/// consistent whenever the input is.
ExpertGraph build_zeta_gadget(const ExpertGraph& g, const Scalar& zeta);

/// Adds the edge (i, j, v) after checking v lies strictly inside the pair's
/// synthetic bounds; the extended graph is then curl consistent whenever the
/// input is. Values on or outside the bounds raise infeasible_value.
ExpertGraph assign_edge(const ExpertGraph& g, ClassId i, ClassId j, const Scalar& v);

struct SynthesisStep {
  std::pair<ClassId, ClassId> pair;
  OpenInterval bounds;
  Scalar chosen;
};

struct SynthesisResult {
  std::vector<SynthesisStep> steps;
  ExpertGraph graph;
};

/// Assigns each requested pair in order to the midpoint of its current
/// bounds, recomputing bounds on the extended graph between assignments.
SynthesisResult synthesize_edges(const ExpertGraph& g,
                                 const std::vector<std::pair<ClassId, ClassId>>& pairs);

}  // namespace egc
