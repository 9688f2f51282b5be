#include "egc/cycledecomp.hpp"

#include <algorithm>

#include "egc/errors.hpp"

namespace egc {

Scalar OrientationDecomposition::total_weight() const {
  Scalar sum(0);
  for (const auto& term : terms) sum += term.weight;
  return sum;
}

std::vector<Scalar> OrientationDecomposition::reconstruct() const {
  std::vector<Scalar> out(length, Scalar(0));
  for (const auto& term : terms)
    for (int i = 0; i < length; ++i)
      if (term.orientation[i]) out[i] += term.weight;
  return out;
}

OrientationDecomposition expand_scaled_ones(int length) {
  if (length < 3) fail(Errc::invalid_parameter, "cycle length must be at least 3");
  OrientationDecomposition d{length, {}};
  for (int i = 0; i < length; ++i) {
    std::vector<int> orientation(length, 1);
    orientation[i] = 0;
    d.terms.push_back({std::move(orientation), Scalar(1, length)});
  }
  return d;
}

namespace {

Scalar norm1(const std::vector<Scalar>& f) {
  Scalar sum(0);
  for (const Scalar& v : f) sum += v;  // entries are nonnegative here
  return sum;
}

std::vector<int> support_of(const std::vector<Scalar>& f) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    if (f[i].sign() > 0) s.push_back(i);
  return s;
}

// Peels support indicators until the remainder has norm exactly 1, then
// finishes with singletons. Entries stay in [0,1]: a pull covering the whole
// support maps x to (x - z) / (1 - z), and the scaled full-support pull is
// only taken when it cannot push the maximum entry above 1 (the caller
// guarantees that, switching to the complement instance otherwise).
void decompose_core(std::vector<Scalar> f, OrientationDecomposition& out, DecompTrace& trace) {
  int len = static_cast<int>(f.size());
  Scalar scale(1);
  while (true) {
    Scalar sigma = norm1(f);
    std::vector<int> support = support_of(f);
    if (sigma == Scalar(1)) {
      for (int i : support) {
        std::vector<int> orientation(len, 0);
        orientation[i] = 1;
        out.terms.push_back({std::move(orientation), scale * f[i]});
        trace.finisher.push_back(f[i]);
      }
      return;
    }
    bool full = static_cast<int>(support.size()) == len;
    Scalar gamma = full ? Scalar(len - 1, len) : Scalar(1);
    Scalar min_entry = f[support[0]];
    for (int i : support) min_entry = min(min_entry, f[i]);
    Scalar zeta_a = min_entry / gamma;
    Scalar zeta_b = (sigma - Scalar(1)) / (gamma * Scalar(static_cast<long>(support.size())) - Scalar(1));
    Scalar z = min(zeta_a, zeta_b);
    if (full) {
      for (int i = 0; i < len; ++i) {
        std::vector<int> orientation(len, 1);
        orientation[i] = 0;
        out.terms.push_back({std::move(orientation), scale * z / Scalar(len)});
      }
    } else {
      std::vector<int> orientation(len, 0);
      for (int i : support) orientation[i] = 1;
      out.terms.push_back({std::move(orientation), scale * z});
    }
    trace.steps.push_back({support, z, full, z == zeta_b});
    if (z == Scalar(1)) return;  // the pull consumed the vector exactly
    for (int i : support) f[i] = (f[i] - z * gamma) / (Scalar(1) - z);
    scale *= Scalar(1) - z;
  }
}

}  // namespace

OrientationDecomposition decompose_cycle(const std::vector<Scalar>& f0, DecompTrace* trace) {
  int len = static_cast<int>(f0.size());
  if (len < 3) fail(Errc::invalid_parameter, "cycle length must be at least 3");
  for (const Scalar& v : f0) {
    if (v.sign() < 0 || v >= Scalar(1))
      fail(Errc::invalid_weight, "cycle weight " + v.str() + " outside [0, 1)");
  }
  Scalar sigma = norm1(f0);
  if (sigma <= Scalar(1))
    fail(Errc::curl_violation, "cycle curl " + sigma.str() + " is not above 1");
  std::vector<int> support = support_of(f0);
  bool full = static_cast<int>(support.size()) == len;
  // norm exactly length-1 is the closed boundary linear ordering graphs may
  // occupy; it still decomposes (the whole vector is one scaled-ones pull, or
  // the complement has norm exactly 1)
  if (full && sigma > Scalar(len - 1))
    fail(Errc::curl_violation,
         "cycle curl " + sigma.str() + " exceeds " + std::to_string(len - 1));

  DecompTrace local;
  DecompTrace& tr = trace ? *trace : local;
  tr = DecompTrace{};

  OrientationDecomposition out{len, {}};
  if (full) {
    // The scaled full-support pull keeps entries at most 1 only when
    // max <= 1 - min/(l-1); otherwise the complement instance satisfies it.
    Scalar min_entry = f0[0], max_entry = f0[0];
    for (const Scalar& v : f0) {
      min_entry = min(min_entry, v);
      max_entry = max(max_entry, v);
    }
    Scalar gamma(len - 1, len);
    Scalar zeta_a = min_entry / gamma;
    Scalar zeta_b = (sigma - Scalar(1)) / (Scalar(len - 1) - Scalar(1));
    bool unsafe = zeta_a < zeta_b && max_entry + min_entry / Scalar(len - 1) > Scalar(1);
    if (unsafe) {
      std::vector<Scalar> complement(len);
      for (int i = 0; i < len; ++i) complement[i] = Scalar(1) - f0[i];
      tr.complemented = true;
      decompose_core(std::move(complement), out, tr);
      for (auto& term : out.terms)
        for (int& bit : term.orientation) bit = 1 - bit;
      return out;
    }
  }
  decompose_core(f0, out, tr);
  return out;
}

Ranking orientation_to_ranking(const std::vector<int>& orientation) {
  int len = static_cast<int>(orientation.size());
  if (len < 3) fail(Errc::invalid_parameter, "cycle length must be at least 3");
  int ones = 0;
  for (int bit : orientation) {
    if (bit != 0 && bit != 1) fail(Errc::invalid_parameter, "orientation bits must be 0 or 1");
    ones += bit;
  }
  if (ones == 0 || ones == len)
    fail(Errc::cyclic_order, "uniformly oriented cycle admits no ranking");

  // bit i set: vertex i precedes vertex i+1; clear: the reverse.
  std::vector<std::vector<int>> succ(len);
  std::vector<int> indegree(len, 0);
  for (int i = 0; i < len; ++i) {
    int a = i, b = (i + 1) % len;
    if (!orientation[i]) std::swap(a, b);
    succ[a].push_back(b);
    ++indegree[b];
  }
  Ranking r;
  std::vector<bool> placed(len, false);
  for (int round = 0; round < len; ++round) {
    int pick = -1;
    for (int v = 0; v < len && pick < 0; ++v)
      if (!placed[v] && indegree[v] == 0) pick = v;
    if (pick < 0) fail(Errc::cyclic_order, "orientation constraints are cyclic");
    placed[pick] = true;
    r.order.push_back(pick);
    for (int w : succ[pick]) --indegree[w];
  }
  return r;
}

RankingDistribution cycle_to_ranking_distribution(const std::vector<Scalar>& f0,
                                                  std::vector<std::string> labels) {
  OrientationDecomposition d = decompose_cycle(f0);
  std::map<std::vector<ClassId>, Scalar> weights;
  for (const auto& term : d.terms) {
    Ranking r = orientation_to_ranking(term.orientation);
    auto [it, inserted] = weights.emplace(r.order, term.weight);
    if (!inserted) it->second += term.weight;
  }
  if (labels.empty()) labels = default_class_labels(d.length);
  return RankingDistribution(std::move(labels), std::move(weights));
}

}  // namespace egc
