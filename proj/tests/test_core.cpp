#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "egc/errors.hpp"
#include "egc/graph.hpp"
#include "egc/table.hpp"
#include "testutil.hpp"

using namespace egc;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

// The cyclic three-state, three-class table whose experts all lean the same
// way around the triangle.
ProbabilityTable condorcet_table() {
  Scalar third(1, 3);
  return ProbabilityTable({"Y1", "Y2", "Y3"},
                          {{S(".01"), S(".90"), S(".09")},
                           {S(".09"), S(".01"), S(".90")},
                           {S(".90"), S(".09"), S(".01")}},
                          {third, third, third});
}

}  // namespace

TEST_CASE("scalar parsing and rendering") {
  CHECK(S("3/10").str() == "3/10");
  CHECK(S("6/4") == Scalar(3, 2));
  CHECK(S("6/4").str() == "3/2");
  CHECK(S(".09") == Scalar(9, 100));
  CHECK(S("0.25") == Scalar(1, 4));
  CHECK(S("-0.5") == Scalar(-1, 2));
  CHECK(S("7") == Scalar(7));
  CHECK(S("7").str() == "7");
  CHECK(S("-3/9").str() == "-1/3");
  CHECK(S("+2/8") == Scalar(1, 4));

  CHECK_THROWS_AS(S(""), Error);
  CHECK_THROWS_AS(S("1/0"), Error);
  CHECK_THROWS_AS(S("a/b"), Error);
  CHECK_THROWS_AS(S("1 /2"), Error);
  CHECK_THROWS_AS(S("."), Error);
  CHECK_THROWS_AS(S("1.2.3"), Error);
}

TEST_CASE("scalar parse round-trips over random rationals") {
  test::Rng rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    long num = test::rand_int(rng, -5000, 5000);
    long den = test::rand_int(rng, 1, 5000);
    Scalar s(num, den);
    CHECK(Scalar::parse(s.str()) == s);
  }
}

TEST_CASE("scalar arithmetic stays exact") {
  Scalar a(1, 3), b(1, 6);
  CHECK(a + b == Scalar(1, 2));
  CHECK(a - b == Scalar(1, 6));
  CHECK(a * b == Scalar(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK(-a == Scalar(-1, 3));
  CHECK(pow(Scalar(1, 10), 3) == Scalar(1, 1000));
  CHECK(min(a, b) == b);
  CHECK(max(a, b) == a);
  CHECK(abs(Scalar(-3, 4)) == Scalar(3, 4));
  CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("situational opinions are pairwise conditional probabilities") {
  std::vector<Scalar> p{S(".2"), S(".1"), S(".7")};
  CHECK(situational_opinion(p, 2, 1) == Scalar(7, 8));  // cancer vs virus
  CHECK(situational_opinion(p, 1, 2) == Scalar(1, 8));

  std::vector<Scalar> uniform{Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)};
  CHECK(situational_opinion(uniform, 0, 2) == Scalar(1, 2));

  std::vector<Scalar> row{S(".01"), S(".90"), S(".09")};
  CHECK(situational_opinion(row, 0, 1) == Scalar(1, 91));

  CHECK_THROWS_AS(situational_opinion(p, 1, 1), Error);
  std::vector<Scalar> bad{S(".5"), Scalar(0), S(".5")};
  CHECK_THROWS_AS(situational_opinion(bad, 0, 1), Error);
}

TEST_CASE("table validation") {
  Scalar half(1, 2);
  CHECK_THROWS_AS(ProbabilityTable({"A", "B"}, {{half, Scalar(1, 3)}}, {Scalar(1)}), Error);
  CHECK_THROWS_AS(ProbabilityTable({"A", "B"}, {{half, half}}, {Scalar(1, 2)}), Error);
  CHECK_THROWS_AS(ProbabilityTable({"A", "A"}, {{half, half}}, {Scalar(1)}), Error);
  CHECK_THROWS_AS(
      ProbabilityTable({"A", "B"}, {{Scalar(0), Scalar(1)}}, {Scalar(1)}), Error);
  CHECK_THROWS_AS(ProbabilityTable({"A", "B"}, {}, {}), Error);

  ProbabilityTable ok({"A", "B"}, {{half, half}}, {Scalar(1)});
  CHECK(ok.class_count() == 2);
  CHECK(ok.state_count() == 1);
}

TEST_CASE("building the cyclic table's graph gives equal mutual majorities") {
  ExpertGraph g = build_expert_graph(condorcet_table(), all_pairs(3));
  Scalar expected(6073, 10010);
  CHECK(g.weight(0, 1) == expected);
  CHECK(g.weight(1, 2) == expected);
  CHECK(g.weight(2, 0) == expected);
  CHECK(expected > Scalar(3, 5));
  // the reverse direction through the skew identity
  CHECK(g.weight(1, 0) == Scalar(3937, 10010));
}

TEST_CASE("single-state graphs reduce to situational opinions") {
  std::vector<Scalar> p{S(".5"), S(".3"), S(".2")};
  ProbabilityTable table({"Y1", "Y2", "Y3"}, {p}, {Scalar(1)});
  ExpertGraph g = build_expert_graph(table, all_pairs(3));
  CHECK(g.weight(0, 1) == Scalar(5, 8));
  CHECK(g.weight(1, 2) == Scalar(3, 5));
  CHECK(g.weight(2, 0) == Scalar(2, 7));
  for (auto [i, j] : all_pairs(3)) CHECK(g.weight(i, j) == situational_opinion(p, i, j));
}

TEST_CASE("stored orientation answers both directions") {
  ExpertGraph g{{"Y1", "Y2", "Y3", "Y4"}};
  g = g.with_edge(0, 1, S(".3"));
  g = g.with_edge(1, 2, S(".3"));
  g = g.with_edge(2, 3, S(".7"));
  g = g.with_edge(3, 0, S(".7"));
  g = g.with_edge(0, 2, S(".5"));
  CHECK(g.weight(0, 1) == Scalar(3, 10));
  CHECK(g.weight(1, 0) == Scalar(7, 10));
  CHECK(g.weight(3, 0) == Scalar(7, 10));
  CHECK(g.weight(0, 3) == Scalar(3, 10));
  CHECK_THROWS_AS(g.weight(1, 3), Error);
  CHECK_THROWS_AS(g.weight(0, 0), Error);
  CHECK_THROWS_AS(g.with_edge(1, 0, S(".4")), Error);  // pair already stored
  CHECK(g.edge_count() == 5);
}

TEST_CASE("strict graphs reject boundary weights, closed graphs accept them") {
  ExpertGraph strict{{"A", "B"}};
  CHECK_THROWS_AS(strict.with_edge(0, 1, Scalar(0)), Error);
  CHECK_THROWS_AS(strict.with_edge(0, 1, Scalar(1)), Error);
  CHECK_THROWS_AS(strict.with_edge(0, 1, Scalar(3, 2)), Error);
  ExpertGraph closed{{"A", "B"}, WeightPolicy::closed_unit};
  CHECK(closed.with_edge(0, 1, Scalar(1)).weight(1, 0) == Scalar(0));
}

TEST_CASE("graphs are immutable values") {
  ExpertGraph g{{"A", "B", "C"}};
  ExpertGraph g2 = g.with_edge(0, 1, Scalar(1, 2));
  CHECK(g.edge_count() == 0);
  CHECK(g2.edge_count() == 1);
}

TEST_CASE("random tables build strictly interior, skew-consistent weights") {
  test::Rng rng(7002);
  for (int trial = 0; trial < 60; ++trial) {
    int n = test::rand_int(rng, 2, 6);
    int k = test::rand_int(rng, 1, 5);
    ProbabilityTable table = test::rand_table(rng, n, k);
    ExpertGraph g = build_expert_graph(table, all_pairs(n));
    for (auto [i, j] : all_pairs(n)) {
      Scalar w = g.weight(i, j);
      CHECK(w > Scalar(0));
      CHECK(w < Scalar(1));
      CHECK(w + g.weight(j, i) == Scalar(1));
    }
  }
}

TEST_CASE("duplicating states with halved probabilities leaves the graph unchanged") {
  test::Rng rng(7003);
  for (int trial = 0; trial < 20; ++trial) {
    int n = test::rand_int(rng, 2, 5);
    int k = test::rand_int(rng, 1, 4);
    ProbabilityTable table = test::rand_table(rng, n, k);
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> d;
    for (StateId u = 0; u < k; ++u) {
      rows.push_back(table.row(u));
      rows.push_back(table.row(u));
      d.push_back(table.d(u) / Scalar(2));
      d.push_back(table.d(u) / Scalar(2));
    }
    ProbabilityTable doubled(table.class_labels(), rows, d);
    CHECK(build_expert_graph(doubled, all_pairs(n)) == build_expert_graph(table, all_pairs(n)));
  }
}

TEST_CASE("empty edge set gives an edgeless graph") {
  ExpertGraph g = build_expert_graph(condorcet_table(), {});
  CHECK(g.edge_count() == 0);
  CHECK(g.vertex_count() == 3);
}
