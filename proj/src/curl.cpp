#include "egc/curl.hpp"

#include <algorithm>
#include <set>

#include "egc/errors.hpp"

namespace egc {

namespace {

void check_distinct(const std::vector<ClassId>& vs) {
  std::set<ClassId> seen(vs.begin(), vs.end());
  if (seen.size() != vs.size())
    fail(Errc::invalid_pair, "vertex sequence repeats a vertex");
}

}  // namespace

Scalar curl(const ExpertGraph& g, const Cycle& c) {
  if (c.length() < 3)
    fail(Errc::invalid_parameter, "curl is defined for cycles of length >= 3");
  check_distinct(c.vertices);
  Scalar total(0);
  for (int i = 0; i < c.length(); ++i)
    total += g.weight(c.vertices[i], c.vertices[(i + 1) % c.length()]);
  return total;
}

Scalar path_weight(const ExpertGraph& g, const Path& b) {
  if (b.vertices.empty()) fail(Errc::invalid_parameter, "empty path");
  check_distinct(b.vertices);
  Scalar total(0);
  for (size_t i = 0; i + 1 < b.vertices.size(); ++i)
    total += g.weight(b.vertices[i], b.vertices[i + 1]);
  return total;
}

CurlReport check_curl_consistency(const ExpertGraph& g) {
  CurlReport report;
  std::optional<Scalar> best;
  Cycle best_cycle;
  // Anchored search: every simple cycle of length >= 3 through directed edge
  // v->u is that edge plus a simple u~>v path that is not the single reverse
  // edge u->v.
  for (const auto& [pair, w] : g.edges()) {
    for (int dir = 0; dir < 2; ++dir) {
      ClassId v = dir == 0 ? pair.first : pair.second;
      ClassId u = dir == 0 ? pair.second : pair.first;
      Scalar anchor_w = g.weight(v, u);
      ShortestPaths sp = shortest_paths(g, u, std::make_pair(u, v));
      if (!sp.dist[v]) continue;
      Scalar total = anchor_w + *sp.dist[v];
      if (!best || total < *best) {
        best = total;
        // Walk parents back from v to u; the cycle is u ~> v with the anchor
        // edge v->u implicit in the closed representation.
        Cycle c;
        for (ClassId x = v; x != u; x = sp.parent[x]) c.vertices.push_back(x);
        c.vertices.push_back(u);
        std::reverse(c.vertices.begin(), c.vertices.end());
        best_cycle = c.canonical_rotation();
      }
    }
  }
  if (!best) return report;  // acyclic: vacuously consistent
  report.min_cycle_curl = *best;
  if (*best > Scalar(1)) return report;
  report.consistent = false;
  report.boundary = (*best == Scalar(1));
  report.witness = best_cycle;
  report.witness_curl = *best;
  return report;
}

std::vector<Cycle> enumerate_cycles(const ExpertGraph& g, int vertex_bound) {
  int n = g.vertex_count();
  if (n > vertex_bound)
    fail(Errc::too_large, "cycle enumeration limited to " + std::to_string(vertex_bound) +
                              " vertices, graph has " + std::to_string(n));
  auto adj = bidirected_adjacency(g);
  std::vector<Cycle> cycles;
  std::vector<ClassId> stack;
  std::vector<bool> on_stack(n, false);
  // Anchor each cycle at its smallest vertex: start there and only walk
  // through larger vertices, so every directed cycle is found exactly once,
  // already in canonical rotation.
  auto dfs = [&](auto&& self, ClassId start, ClassId at) -> void {
    for (const auto& [next, w] : adj[at]) {
      (void)w;
      if (next == start && stack.size() >= 3) cycles.push_back(Cycle{stack});
      if (next <= start || on_stack[next]) continue;
      stack.push_back(next);
      on_stack[next] = true;
      self(self, start, next);
      stack.pop_back();
      on_stack[next] = false;
    }
  };
  for (ClassId s = 0; s < n; ++s) {
    stack = {s};
    on_stack.assign(n, false);
    on_stack[s] = true;
    dfs(dfs, s, s);
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return cycles;
}

Scalar multiway_opinion(const std::vector<Scalar>& p, ClassId i, const std::vector<ClassId>& others) {
  if (others.empty()) fail(Errc::invalid_pair, "multiway opinion needs at least one other class");
  std::set<ClassId> seen{i};
  for (ClassId j : others)
    if (!seen.insert(j).second)
      fail(Errc::invalid_pair, "multiway opinion classes must be distinct");
  int n = static_cast<int>(p.size());
  if (i < 0 || i >= n) fail(Errc::invalid_pair, "class index out of range");
  for (ClassId j : others)
    if (j < 0 || j >= n) fail(Errc::invalid_pair, "class index out of range");
  for (const Scalar& v : p)
    if (v.sign() <= 0)
      fail(Errc::invalid_table, "probability vector has a non-positive entry " + v.str());
  Scalar denom = p[i];
  for (ClassId j : others) denom += p[j];
  return p[i] / denom;
}

Scalar multiway_curl(const ProbabilityTable& table, const std::vector<ClassId>& cycle, int window) {
  int len = static_cast<int>(cycle.size());
  if (window < 3 || window > len)
    fail(Errc::invalid_window, "window must satisfy 3 <= window <= cycle length, got " +
                                   std::to_string(window) + " for length " + std::to_string(len));
  check_distinct(cycle);
  for (ClassId a : cycle)
    if (a < 0 || a >= table.class_count()) fail(Errc::invalid_pair, "class index out of range");
  Scalar total(0);
  for (StateId u = 0; u < table.state_count(); ++u) {
    const auto& p = table.row(u);
    Scalar state_curl(0);
    for (int i = 0; i < len; ++i) {
      std::vector<ClassId> others;
      others.reserve(window - 1);
      for (int step = 1; step < window; ++step) others.push_back(cycle[(i + step) % len]);
      state_curl += multiway_opinion(p, cycle[i], others);
    }
    total += table.d(u) * state_curl;
  }
  return total;
}

}  // namespace egc
