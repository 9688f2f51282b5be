#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egc/scalar.hpp"
#include "egc/table.hpp"

namespace egc {

/// Expert graphs built from probability tables carry weights strictly inside
/// (0,1). Linear ordering graphs may touch the boundary, so they use the
/// closed variant.
enum class WeightPolicy { strict_open, closed_unit };

/// Skew-symmetric weighted digraph: each unordered pair {i,j} is stored once,
/// oriented from the lower index, and the reverse direction is answered via
/// f(j,i) = 1 - f(i,j). Graphs are immutable values; edits return new graphs.
class ExpertGraph {
 public:
  explicit ExpertGraph(std::vector<std::string> labels,
                       WeightPolicy policy = WeightPolicy::strict_open);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ClassId v) const { return labels_.at(v); }
  WeightPolicy policy() const { return policy_; }

  bool has_pair(ClassId i, ClassId j) const;
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Directed weight f(i, j). Throws absent_edge if the pair is not stored.
  Scalar weight(ClassId i, ClassId j) const;

  /// Structural edge addition (no feasibility checks beyond the weight
  /// policy). Throws edge_exists for duplicate pairs.
  ExpertGraph with_edge(ClassId from, ClassId to, const Scalar& w) const;

  /// Stored edges keyed by (lo, hi); the mapped weight is f(lo, hi).
  const std::map<std::pair<ClassId, ClassId>, Scalar>& edges() const { return edges_; }

  /// Index of a display label, or nullopt.
  std::optional<ClassId> find_label(const std::string& label) const;

  bool is_complete() const;

  friend bool operator==(const ExpertGraph& a, const ExpertGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(ClassId v) const;

  std::vector<std::string> labels_;
  std::map<std::pair<ClassId, ClassId>, Scalar> edges_;
  WeightPolicy policy_;
};

/// Expected situational opinion per requested pair:
/// f(i,j) = sum_u d(u) * p_u(i) / (p_u(i) + p_u(j)), computed exactly.
ExpertGraph build_expert_graph(const ProbabilityTable& table,
                               const std::vector<std::pair<ClassId, ClassId>>& pairs);

/// All unordered pairs over n classes, (0,1), (0,2), ...
std::vector<std::pair<ClassId, ClassId>> all_pairs(int n);

/// Open vertex sequence; consecutive pairs must be stored in the graph the
/// path is evaluated against.
struct Path {
  std::vector<ClassId> vertices;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Closed vertex sequence (the wrap-around edge is implicit). Length >= 3 for
/// curl evaluation.
struct Cycle {
  std::vector<ClassId> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  Cycle reversed() const;
  /// Same cyclic order, rotated so the smallest vertex comes first.
  Cycle canonical_rotation() const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Out-edges of every vertex in the bidirected view (stored orientation plus
/// the skew-implied reverse), sorted by target index.
std::vector<std::vector<std::pair<ClassId, Scalar>>> bidirected_adjacency(const ExpertGraph& g);

struct ShortestPaths {
  std::vector<std::optional<Scalar>> dist;
  std::vector<ClassId> parent;  // -1 where unreachable / source
};

/// Dijkstra over the bidirected view (weights are nonnegative). At most one
/// directed edge can be excluded, which is how minimum-cycle search avoids the
/// trivial two-cycles formed by a pair's two orientations.
ShortestPaths shortest_paths(const ExpertGraph& g, ClassId source,
                             std::optional<std::pair<ClassId, ClassId>> skip_edge = std::nullopt);

}  // namespace egc
