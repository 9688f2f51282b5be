#pragma once

#include <map>
#include <string>
#include <vector>

#include "egc/graph.hpp"
#include "egc/table.hpp"

namespace egc {

/// Total order of class indices, best first.
struct Ranking {
  std::vector<ClassId> order;
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Probability distribution over rankings: positive weights summing to
/// exactly 1. Keys are permutations of [0, n).
class RankingDistribution {
 public:
  RankingDistribution(std::vector<std::string> labels,
                      std::map<std::vector<ClassId>, Scalar> weights);

  int class_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::vector<ClassId>, Scalar>& weights() const { return weights_; }

  friend bool operator==(const RankingDistribution& a, const RankingDistribution& b) {
    return a.labels_ == b.labels_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::vector<ClassId>, Scalar> weights_;
};

/// 1 when i precedes j in the ranking, else 0.
int ranking_opinion(const Ranking& r, ClassId i, ClassId j);

/// Linear ordering graph: expected ranking opinion per requested pair.
/// Weights may touch 0 and 1 (point masses), so the result uses the closed
/// weight policy.
ExpertGraph build_log(const RankingDistribution& w,
                      const std::vector<std::pair<ClassId, ClassId>>& pairs);
ExpertGraph build_log(const RankingDistribution& w);  // complete graph

/// Geometric categorical distribution realizing a ranking to accuracy 1/t:
/// class at rank position i gets probability proportional to t^-i. Requires
/// t > 2 so that every dominant pairwise opinion exceeds 1/2.
std::vector<Scalar> approx_table_for_ranking(const Ranking& r, const Scalar& t);

/// One state per ranking with d(u_r) = w(r) and the geometric row above,
/// using t = max(m/epsilon, 3) where m counts the pairs of the complete
/// graph. Every rebuilt edge weight lands within epsilon of the LOG's.
ProbabilityTable log_to_expert_table(const RankingDistribution& w, const Scalar& epsilon);

struct PrefixComponent {
  Scalar weight;      // the prefix class's probability
  ClassId prefix;     // class forced ahead of everything else
  ExpertGraph graph;  // 1 on edges out of the prefix class, original weights elsewhere
};

/// Splits a single-state expert graph into n prefix graphs weighted by the
/// generating categorical distribution; the weighted edge-wise sum
/// reconstructs the input exactly.
std::vector<PrefixComponent> prefix_decompose(const ExpertGraph& gu, const std::vector<Scalar>& p);

/// Removes class i and renormalizes: p'_j = p_j / (1 - p_i). Pairwise
/// opinions among the survivors are unchanged.
std::vector<Scalar> drop_class(const std::vector<Scalar>& p, ClassId i);

inline constexpr int kDefaultFactorialBound = 8;

/// Sequential-removal (Plackett-Luce) ranking weights for one categorical
/// distribution: w(r) = prod_i p(r_i) / (1 - sum_{j<i} p(r_j)). The induced
/// linear ordering graph reproduces every pairwise opinion of p exactly.
RankingDistribution table_to_ranking_weights(const std::vector<Scalar>& p,
                                             std::vector<std::string> labels = {},
                                             int factorial_bound = kDefaultFactorialBound);

/// Mixture of the per-state ranking weights under the state distribution;
/// its LOG equals the expert graph built from the table, edge for edge.
RankingDistribution expert_graph_to_log(const ProbabilityTable& table,
                                        int factorial_bound = kDefaultFactorialBound);

enum class Membership { interior, boundary, non_member };
enum class MembershipMethod { automatic, curl_fast_path, exact_feasibility };

const char* to_string(Membership m);

/// Linear-ordering-polytope membership for the graph's edge weights.
/// Fast path (complete graphs, n <= 5, where the curl condition is known to
/// characterize the polytope): classify by the minimum cycle curl.
/// Exact path (n <= 7): exact-rational feasibility over all n! rankings,
/// maximizing the minimum ranking weight; interior iff that maximum is
/// positive, boundary iff it is exactly zero.
Membership membership_oracle(const ExpertGraph& g,
                             MembershipMethod method = MembershipMethod::automatic);

/// All permutations of [0, n) in lexicographic order.
std::vector<std::vector<ClassId>> enumerate_rankings(int n);

}  // namespace egc
