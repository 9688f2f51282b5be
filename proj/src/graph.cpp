#include "egc/graph.hpp"

#include <algorithm>

#include "egc/errors.hpp"

namespace egc {

ExpertGraph::ExpertGraph(std::vector<std::string> labels, WeightPolicy policy)
    : labels_(std::move(labels)), policy_(policy) {
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        fail(Errc::invalid_parameter, "duplicate vertex label '" + labels_[i] + "'");
}

void ExpertGraph::check_vertex(ClassId v) const {
  if (v < 0 || v >= vertex_count())
    fail(Errc::invalid_pair, "vertex index " + std::to_string(v) + " out of range");
}

bool ExpertGraph::has_pair(ClassId i, ClassId j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return false;
  return edges_.count({std::min(i, j), std::max(i, j)}) != 0;
}

Scalar ExpertGraph::weight(ClassId i, ClassId j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) fail(Errc::invalid_pair, "no self-loops: asked for f(" + label(i) + ", " + label(i) + ")");
  auto it = edges_.find({std::min(i, j), std::max(i, j)});
  if (it == edges_.end())
    fail(Errc::absent_edge, "pair {" + label(i) + ", " + label(j) + "} is not in the graph");
  return i < j ? it->second : Scalar(1) - it->second;
}

ExpertGraph ExpertGraph::with_edge(ClassId from, ClassId to, const Scalar& w) const {
  check_vertex(from);
  check_vertex(to);
  if (from == to) fail(Errc::invalid_pair, "no self-loops");
  if (has_pair(from, to))
    fail(Errc::edge_exists, "pair {" + label(from) + ", " + label(to) + "} already present");
  if (w < Scalar(0) || w > Scalar(1))
    fail(Errc::invalid_weight, "edge weight " + w.str() + " outside [0, 1]");
  if (policy_ == WeightPolicy::strict_open && (w.is_zero() || w == Scalar(1)))
    fail(Errc::invalid_weight, "edge weight " + w.str() + " not strictly inside (0, 1)");
  ExpertGraph g = *this;
  if (from < to)
    g.edges_[{from, to}] = w;
  else
    g.edges_[{to, from}] = Scalar(1) - w;
  return g;
}

std::optional<ClassId> ExpertGraph::find_label(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool ExpertGraph::is_complete() const {
  int n = vertex_count();
  return edge_count() == n * (n - 1) / 2;
}

std::vector<std::pair<ClassId, ClassId>> all_pairs(int n) {
  std::vector<std::pair<ClassId, ClassId>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

ExpertGraph build_expert_graph(const ProbabilityTable& table,
                               const std::vector<std::pair<ClassId, ClassId>>& pairs) {
  ExpertGraph g(table.class_labels());
  for (auto [i, j] : pairs) {
    Scalar w(0);
    for (StateId u = 0; u < table.state_count(); ++u)
      w += table.d(u) * situational_opinion(table.row(u), i, j);
    g = g.with_edge(i, j, w);
  }
  return g;
}

Cycle Cycle::reversed() const {
  Cycle r = *this;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r.canonical_rotation();
}

Cycle Cycle::canonical_rotation() const {
  if (vertices.empty()) return *this;
  auto lowest = std::min_element(vertices.begin(), vertices.end());
  Cycle r;
  r.vertices.insert(r.vertices.end(), lowest, vertices.end());
  r.vertices.insert(r.vertices.end(), vertices.begin(), lowest);
  return r;
}

std::vector<std::vector<std::pair<ClassId, Scalar>>> bidirected_adjacency(const ExpertGraph& g) {
  std::vector<std::vector<std::pair<ClassId, Scalar>>> adj(g.vertex_count());
  for (const auto& [pair, w] : g.edges()) {
    adj[pair.first].emplace_back(pair.second, w);
    adj[pair.second].emplace_back(pair.first, Scalar(1) - w);
  }
  for (auto& out : adj)
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return adj;
}

ShortestPaths shortest_paths(const ExpertGraph& g, ClassId source,
                             std::optional<std::pair<ClassId, ClassId>> skip_edge) {
  int n = g.vertex_count();
  auto adj = bidirected_adjacency(g);
  ShortestPaths sp;
  sp.dist.assign(n, std::nullopt);
  sp.parent.assign(n, -1);
  std::vector<bool> done(n, false);
  sp.dist[source] = Scalar(0);
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v] || !sp.dist[v]) continue;
      if (u == -1 || *sp.dist[v] < *sp.dist[u]) u = v;
    }
    if (u == -1) break;
    done[u] = true;
    for (const auto& [v, w] : adj[u]) {
      if (skip_edge && skip_edge->first == u && skip_edge->second == v) continue;
      Scalar cand = *sp.dist[u] + w;
      if (!sp.dist[v] || cand < *sp.dist[v]) {
        sp.dist[v] = cand;
        sp.parent[v] = u;
      }
    }
  }
  return sp;
}

}  // namespace egc
