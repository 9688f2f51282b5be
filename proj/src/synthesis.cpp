#include "egc/synthesis.hpp"

#include "egc/errors.hpp"

namespace egc {

namespace {

void require_absent(const ExpertGraph& g, ClassId i, ClassId j) {
  if (i == j) fail(Errc::invalid_pair, "need two distinct classes");
  if (g.has_pair(i, j))
    fail(Errc::edge_exists,
         "pair {" + g.label(i) + ", " + g.label(j) + "} already has an expert");
}

// Raw one-directional shortest path weights between i and j.
struct PairPaths {
  std::optional<Scalar> forward;   // min W over i ~> j
  std::optional<Scalar> backward;  // min W over j ~> i
};

PairPaths pair_paths(const ExpertGraph& g, ClassId i, ClassId j) {
  PairPaths p;
  p.forward = shortest_paths(g, i).dist[j];
  p.backward = shortest_paths(g, j).dist[i];
  return p;
}

// Splits a weight into two path legs, larger half first, exactly as the
// gadget construction labels them: (w - floor_half, floor_half).
std::pair<Scalar, Scalar> split_half(const Scalar& w) {
  mpz_class num = w.numerator(), den = w.denominator(), half;
  mpz_fdiv_q_ui(half.get_mpz_t(), num.get_mpz_t(), 2);
  Scalar floor_half = Scalar::from_raw(mpq_class(half, den));
  return {w - floor_half, floor_half};
}

}  // namespace

OpenInterval synthetic_bounds(const ExpertGraph& g, ClassId i, ClassId j) {
  require_absent(g, i, j);
  PairPaths p = pair_paths(g, i, j);
  Scalar hi = p.forward ? min(*p.forward, Scalar(1)) : Scalar(1);
  Scalar lo = p.backward ? max(Scalar(1) - *p.backward, Scalar(0)) : Scalar(0);
  return OpenInterval{lo, hi};
}

std::optional<Scalar> zeta_accuracy(const ExpertGraph& g, ClassId i, ClassId j) {
  require_absent(g, i, j);
  PairPaths p = pair_paths(g, i, j);
  if (!p.forward || !p.backward) return std::nullopt;
  return *p.forward + *p.backward - Scalar(1);
}

ExpertGraph build_zeta_gadget(const ExpertGraph& g, const Scalar& zeta) {
  if (zeta.sign() <= 0) fail(Errc::invalid_zeta, "zeta must be positive, got " + zeta.str());
  Scalar quarter = zeta / Scalar(4);

  std::vector<std::string> labels = g.labels();
  struct GadgetLeg {
    ClassId from, to;
    Scalar weight;
  };
  std::vector<GadgetLeg> legs;
  int next = g.vertex_count();
  for (const auto& [pair, w] : g.edges()) {
    auto [i, j] = pair;
    // forward path i -> [ij] -> j totalling w + zeta/2, reverse path
    // j -> [ji] -> i totalling (1 - w) + zeta/2
    for (int dir = 0; dir < 2; ++dir) {
      ClassId from = dir == 0 ? i : j;
      ClassId to = dir == 0 ? j : i;
      Scalar total = dir == 0 ? w : Scalar(1) - w;
      auto [first, second] = split_half(total);
      Scalar leg1 = first + quarter, leg2 = second + quarter;
      if (leg1 >= Scalar(1) || leg2 >= Scalar(1) || leg1.sign() <= 0 || leg2.sign() <= 0)
        fail(Errc::invalid_zeta, "zeta " + zeta.str() + " pushes a path leg for edge {" +
                                     g.label(i) + ", " + g.label(j) + "} outside (0, 1)");
      std::string label = g.label(from) + ">" + g.label(to);
      for (const std::string& existing : labels)
        if (existing == label)
          fail(Errc::invalid_parameter, "gadget label '" + label + "' collides with a vertex");
      labels.push_back(label);
      ClassId mid = next++;
      legs.push_back({from, mid, leg1});
      legs.push_back({mid, to, leg2});
    }
  }
  ExpertGraph out{labels, g.policy()};
  for (const GadgetLeg& leg : legs) out = out.with_edge(leg.from, leg.to, leg.weight);
  return out;
}

ExpertGraph assign_edge(const ExpertGraph& g, ClassId i, ClassId j, const Scalar& v) {
  OpenInterval bounds = synthetic_bounds(g, i, j);
  if (v <= bounds.lo)
    fail(Errc::infeasible_value, "value " + v.str() + " is not above the lower bound " +
                                     bounds.lo.str() + " for {" + g.label(i) + ", " + g.label(j) + "}");
  if (v >= bounds.hi)
    fail(Errc::infeasible_value, "value " + v.str() + " is not below the upper bound " +
                                     bounds.hi.str() + " for {" + g.label(i) + ", " + g.label(j) + "}");
  return g.with_edge(i, j, v);
}

SynthesisResult synthesize_edges(const ExpertGraph& g,
                                 const std::vector<std::pair<ClassId, ClassId>>& pairs) {
  SynthesisResult result{{}, g};
  for (auto [i, j] : pairs) {
    OpenInterval bounds = synthetic_bounds(result.graph, i, j);
    Scalar chosen = (bounds.lo + bounds.hi) / Scalar(2);
    result.graph = result.graph.with_edge(i, j, chosen);
    result.steps.push_back({{i, j}, bounds, chosen});
  }
  return result;
}

}  // namespace egc
