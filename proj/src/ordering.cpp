#include "egc/ordering.hpp"

#include <algorithm>

#include "egc/curl.hpp"
#include "egc/errors.hpp"
#include "egc/simplex.hpp"

namespace egc {

namespace {

void check_permutation(const std::vector<ClassId>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    fail(Errc::invalid_distribution, "ranking length does not match the class count");
  std::vector<bool> seen(n, false);
  for (ClassId v : order) {
    if (v < 0 || v >= n || seen[v])
      fail(Errc::invalid_distribution, "ranking is not a permutation of the classes");
    seen[v] = true;
  }
}

std::vector<int> positions_of(const std::vector<ClassId>& order) {
  std::vector<int> pos(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

RankingDistribution::RankingDistribution(std::vector<std::string> labels,
                                         std::map<std::vector<ClassId>, Scalar> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.empty()) fail(Errc::invalid_distribution, "ranking distribution has no classes");
  if (weights_.empty()) fail(Errc::invalid_distribution, "ranking distribution has no rankings");
  Scalar sum(0);
  for (const auto& [order, w] : weights_) {
    check_permutation(order, class_count());
    if (w.sign() <= 0)
      fail(Errc::invalid_distribution, "ranking weight " + w.str() + " is not positive");
    sum += w;
  }
  if (sum != Scalar(1))
    fail(Errc::invalid_distribution, "ranking weights sum to " + sum.str() + ", expected 1");
}

int ranking_opinion(const Ranking& r, ClassId i, ClassId j) {
  if (i == j) fail(Errc::invalid_pair, "ranking opinion needs two distinct classes");
  int pos_i = -1, pos_j = -1;
  for (size_t k = 0; k < r.order.size(); ++k) {
    if (r.order[k] == i) pos_i = static_cast<int>(k);
    if (r.order[k] == j) pos_j = static_cast<int>(k);
  }
  if (pos_i < 0 || pos_j < 0) fail(Errc::invalid_pair, "class missing from the ranking");
  return pos_i < pos_j ? 1 : 0;
}

ExpertGraph build_log(const RankingDistribution& w,
                      const std::vector<std::pair<ClassId, ClassId>>& pairs) {
  ExpertGraph g(w.labels(), WeightPolicy::closed_unit);
  for (auto [i, j] : pairs) {
    Scalar weight(0);
    for (const auto& [order, wr] : w.weights()) {
      auto pos = positions_of(order);
      if (pos[i] < pos[j]) weight += wr;
    }
    g = g.with_edge(i, j, weight);
  }
  return g;
}

ExpertGraph build_log(const RankingDistribution& w) {
  return build_log(w, all_pairs(w.class_count()));
}

std::vector<Scalar> approx_table_for_ranking(const Ranking& r, const Scalar& t) {
  if (t <= Scalar(2))
    fail(Errc::invalid_parameter, "accuracy parameter must exceed 2, got " + t.str());
  int n = static_cast<int>(r.order.size());
  check_permutation(r.order, n);
  Scalar inv = Scalar(1) / t;
  std::vector<Scalar> p(n);
  Scalar alpha(1), z(0);
  for (int pos = 0; pos < n; ++pos) {
    alpha *= inv;  // 1 / t^(pos+1)
    p[r.order[pos]] = alpha;
    z += alpha;
  }
  for (Scalar& v : p) v /= z;
  return p;
}

ProbabilityTable log_to_expert_table(const RankingDistribution& w, const Scalar& epsilon) {
  if (epsilon.sign() <= 0)
    fail(Errc::invalid_parameter, "epsilon must be positive, got " + epsilon.str());
  int n = w.class_count();
  Scalar m(static_cast<long>(n) * (n - 1) / 2);
  Scalar t = max(m / epsilon, Scalar(3));
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> d;
  for (const auto& [order, wr] : w.weights()) {
    rows.push_back(approx_table_for_ranking(Ranking{order}, t));
    d.push_back(wr);
  }
  return ProbabilityTable(w.labels(), std::move(rows), std::move(d));
}

std::vector<PrefixComponent> prefix_decompose(const ExpertGraph& gu, const std::vector<Scalar>& p) {
  int n = gu.vertex_count();
  if (static_cast<int>(p.size()) != n)
    fail(Errc::inconsistent_input, "probability vector length does not match the graph");
  validate_distribution(p, "probability vector");
  for (const auto& [pair, w] : gu.edges()) {
    if (w != situational_opinion(p, pair.first, pair.second))
      fail(Errc::inconsistent_input, "graph edge {" + gu.label(pair.first) + ", " +
                                         gu.label(pair.second) +
                                         "} does not match the probability vector");
  }
  std::vector<PrefixComponent> parts;
  for (ClassId a = 0; a < n; ++a) {
    ExpertGraph prefix(gu.labels(), WeightPolicy::closed_unit);
    for (const auto& [pair, w] : gu.edges()) {
      Scalar pw = w;
      if (pair.first == a) pw = Scalar(1);
      if (pair.second == a) pw = Scalar(0);
      prefix = prefix.with_edge(pair.first, pair.second, pw);
    }
    parts.push_back({p[a], a, std::move(prefix)});
  }
  return parts;
}

std::vector<Scalar> drop_class(const std::vector<Scalar>& p, ClassId i) {
  validate_distribution(p, "probability vector");
  if (p.size() < 2) fail(Errc::invalid_parameter, "need at least two classes to drop one");
  if (i < 0 || i >= static_cast<int>(p.size()))
    fail(Errc::invalid_pair, "class index out of range");
  std::vector<Scalar> out;
  out.reserve(p.size() - 1);
  Scalar rest = Scalar(1) - p[i];
  for (int j = 0; j < static_cast<int>(p.size()); ++j)
    if (j != i) out.push_back(p[j] / rest);
  return out;
}

std::vector<std::vector<ClassId>> enumerate_rankings(int n) {
  std::vector<ClassId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::vector<ClassId>> all;
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return all;
}

RankingDistribution table_to_ranking_weights(const std::vector<Scalar>& p,
                                             std::vector<std::string> labels,
                                             int factorial_bound) {
  validate_distribution(p, "probability vector");
  int n = static_cast<int>(p.size());
  if (n > factorial_bound)
    fail(Errc::too_large, "ranking enumeration limited to " + std::to_string(factorial_bound) +
                              " classes, got " + std::to_string(n));
  if (labels.empty()) labels = default_class_labels(n);
  std::map<std::vector<ClassId>, Scalar> weights;
  for (const auto& order : enumerate_rankings(n)) {
    Scalar w(1), remaining(1);
    for (ClassId cls : order) {
      w *= p[cls] / remaining;
      remaining -= p[cls];
    }
    weights[order] = w;
  }
  return RankingDistribution(std::move(labels), std::move(weights));
}

RankingDistribution expert_graph_to_log(const ProbabilityTable& table, int factorial_bound) {
  std::map<std::vector<ClassId>, Scalar> mixture;
  for (StateId u = 0; u < table.state_count(); ++u) {
    RankingDistribution per_state =
        table_to_ranking_weights(table.row(u), table.class_labels(), factorial_bound);
    for (const auto& [order, w] : per_state.weights()) {
      auto [it, inserted] = mixture.emplace(order, table.d(u) * w);
      if (!inserted) it->second += table.d(u) * w;
    }
  }
  return RankingDistribution(table.class_labels(), std::move(mixture));
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior-member";
    case Membership::boundary: return "boundary";
    case Membership::non_member: return "non-member";
  }
  return "unknown";
}

namespace {

Membership membership_by_curl(const ExpertGraph& g) {
  CurlReport report = check_curl_consistency(g);
  if (report.consistent) return Membership::interior;
  return report.boundary ? Membership::boundary : Membership::non_member;
}

// Feasibility of lambda >= 0 over all n! rankings matching every edge weight,
// recast with a floor variable s: lambda_r = s + mu_r. Maximizing s maximizes
// the minimum ranking weight; the graph is interior iff the maximum is
// positive.
Membership membership_by_feasibility(const ExpertGraph& g) {
  int n = g.vertex_count();
  auto rankings = enumerate_rankings(n);
  long count = factorial(n);
  LinearProgram lp;
  int cols = static_cast<int>(count) + 1;  // mu per ranking, then s
  for (const auto& [pair, w] : g.edges()) {
    std::vector<Scalar> row(cols, Scalar(0));
    for (size_t r = 0; r < rankings.size(); ++r) {
      auto pos = positions_of(rankings[r]);
      if (pos[pair.first] < pos[pair.second]) row[r] = Scalar(1);
    }
    row[cols - 1] = Scalar(count, 2);  // each pair is ordered either way in half the rankings
    lp.A.push_back(std::move(row));
    lp.b.push_back(w);
  }
  std::vector<Scalar> total(cols, Scalar(1));
  total[cols - 1] = Scalar(count);
  lp.A.push_back(std::move(total));
  lp.b.push_back(Scalar(1));
  lp.c.assign(cols, Scalar(0));
  lp.c[cols - 1] = Scalar(1);

  LpResult res = solve_lp(lp);
  if (res.status == LpStatus::infeasible) return Membership::non_member;
  if (res.status != LpStatus::optimal)
    fail(Errc::invalid_parameter, "membership LP unexpectedly unbounded");
  return res.objective > Scalar(0) ? Membership::interior : Membership::boundary;
}

}  // namespace

Membership membership_oracle(const ExpertGraph& g, MembershipMethod method) {
  int n = g.vertex_count();
  if (method == MembershipMethod::automatic)
    method = (n <= 5 && g.is_complete()) ? MembershipMethod::curl_fast_path
                                         : MembershipMethod::exact_feasibility;
  if (method == MembershipMethod::curl_fast_path) {
    if (n > 5)
      fail(Errc::too_large, "curl fast path is only valid up to 5 classes, got " +
                                std::to_string(n));
    if (!g.is_complete())
      fail(Errc::invalid_parameter, "curl fast path needs a complete graph");
    return membership_by_curl(g);
  }
  if (n > 7)
    fail(Errc::too_large, "exact feasibility path limited to 7 classes, got " +
                              std::to_string(n));
  return membership_by_feasibility(g);
}

}  // namespace egc
