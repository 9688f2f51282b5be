#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "egc/curl.hpp"
#include "egc/cycledecomp.hpp"
#include "egc/errors.hpp"
#include "testutil.hpp"

using namespace egc;

namespace {

void check_valid(const OrientationDecomposition& d, const std::vector<Scalar>& f0) {
  CHECK(d.length == static_cast<int>(f0.size()));
  for (const auto& term : d.terms) {
    CHECK(term.weight > Scalar(0));
    int ones = 0;
    for (int bit : term.orientation) {
      CHECK((bit == 0 || bit == 1));
      ones += bit;
    }
    CHECK(ones > 0);
    CHECK(ones < d.length);
  }
  CHECK(d.total_weight() == Scalar(1));
  CHECK(d.reconstruct() == f0);
}

std::vector<Scalar> rand_consistent_cycle(test::Rng& rng, int len, int scale = 40) {
  while (true) {
    std::vector<Scalar> f;
    Scalar sum(0);
    for (int i = 0; i < len; ++i) {
      f.push_back(test::rand_weight(rng, scale));
      sum += f.back();
    }
    if (sum > Scalar(1) && sum < Scalar(len - 1)) return f;
  }
}

// One entry pushed toward 1, the rest tiny: exercises the regime where the
// scaled full-support pull would overflow an entry.
std::vector<Scalar> rand_spiked_cycle(test::Rng& rng, int len) {
  while (true) {
    std::vector<Scalar> f;
    Scalar sum(0);
    int spike = test::rand_int(rng, 0, len - 1);
    for (int i = 0; i < len; ++i) {
      int den = test::rand_int(rng, 50, 400);
      f.push_back(i == spike ? Scalar(den - 1, den) : Scalar(test::rand_int(rng, 1, 12), den));
      sum += f.back();
    }
    if (sum > Scalar(1) && sum < Scalar(len - 1)) return f;
  }
}

}  // namespace

TEST_CASE("scaled ones expand into complement-of-singleton orientations") {
  OrientationDecomposition d4 = expand_scaled_ones(4);
  REQUIRE(d4.terms.size() == 4);
  CHECK(d4.terms[0].orientation == std::vector<int>{0, 1, 1, 1});
  CHECK(d4.terms[1].orientation == std::vector<int>{1, 0, 1, 1});
  CHECK(d4.terms[2].orientation == std::vector<int>{1, 1, 0, 1});
  CHECK(d4.terms[3].orientation == std::vector<int>{1, 1, 1, 0});
  for (const auto& term : d4.terms) CHECK(term.weight == Scalar(1, 4));
  CHECK(d4.reconstruct() == std::vector<Scalar>(4, Scalar(3, 4)));

  OrientationDecomposition d3 = expand_scaled_ones(3);
  CHECK(d3.terms.size() == 3);
  CHECK(d3.reconstruct() == std::vector<Scalar>(3, Scalar(2, 3)));

  CHECK_THROWS_AS(expand_scaled_ones(2), Error);
}

TEST_CASE("support-restricted golden instance") {
  std::vector<Scalar> f{Scalar(0), Scalar(1, 4), Scalar(2, 4), Scalar(2, 4)};
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(f, &trace);

  CHECK(!trace.complemented);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].z == Scalar(1, 8));
  CHECK(trace.steps[0].support == std::vector<int>{1, 2, 3});
  CHECK(!trace.steps[0].full_support);
  CHECK(trace.steps[0].reached_norm_one);
  CHECK(trace.finisher == std::vector<Scalar>{Scalar(1, 7), Scalar(3, 7), Scalar(3, 7)});

  REQUIRE(d.terms.size() == 4);
  CHECK(d.terms[0].orientation == std::vector<int>{0, 1, 1, 1});
  CHECK(d.terms[0].weight == Scalar(1, 8));
  CHECK(d.terms[1].orientation == std::vector<int>{0, 1, 0, 0});
  CHECK(d.terms[1].weight == Scalar(1, 8));  // 7/8 of 1/7
  CHECK(d.terms[2].orientation == std::vector<int>{0, 0, 1, 0});
  CHECK(d.terms[2].weight == Scalar(3, 8));
  CHECK(d.terms[3].orientation == std::vector<int>{0, 0, 0, 1});
  CHECK(d.terms[3].weight == Scalar(3, 8));
  check_valid(d, f);
}

TEST_CASE("full-support halves pull the scaled ones then finish") {
  std::vector<Scalar> f(3, Scalar(1, 2));
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(f, &trace);
  CHECK(!trace.complemented);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].full_support);
  CHECK(trace.steps[0].z == Scalar(1, 2));  // zeta_b = 1/2 beats zeta_a = 3/4
  CHECK(trace.steps[0].reached_norm_one);
  CHECK(trace.finisher == std::vector<Scalar>(3, Scalar(1, 3)));
  CHECK(d.terms.size() == 6);
  check_valid(d, f);
}

TEST_CASE("a pull sized by the norm lands exactly on norm one") {
  std::vector<Scalar> f{Scalar(2, 5), Scalar(7, 20), Scalar(3, 10)};  // sums to 21/20
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(f, &trace);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].z == Scalar(1, 20));  // (sigma - 1) / (gamma * 3 - 1)
  CHECK(trace.steps[0].reached_norm_one);
  check_valid(d, f);
}

TEST_CASE("near-one entries route through the complement instance") {
  std::vector<Scalar> f{Scalar(19, 20), Scalar(1, 5), Scalar(3, 10), Scalar(1, 4)};
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(f, &trace);
  CHECK(trace.complemented);
  check_valid(d, f);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(decompose_cycle({Scalar(1, 2), Scalar(1, 2)}), Error);
  // curl at most 1
  CHECK_THROWS_AS(decompose_cycle({Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)}), Error);
  CHECK_THROWS_AS(decompose_cycle({Scalar(1, 4), Scalar(1, 4), Scalar(1, 4)}), Error);
  // curl above length - 1 on full support
  CHECK_THROWS_AS(decompose_cycle({Scalar(3, 4), Scalar(3, 4), Scalar(3, 4)}), Error);
  // boundary entries
  CHECK_THROWS_AS(decompose_cycle({Scalar(1), Scalar(1, 2), Scalar(1, 4)}), Error);
  CHECK_THROWS_AS(decompose_cycle({Scalar(-1, 2), Scalar(3, 4), Scalar(3, 4)}), Error);
}

TEST_CASE("random consistent cycles decompose exactly within the step budget") {
  test::Rng rng(8001);
  for (int trial = 0; trial < 300; ++trial) {
    int len = test::rand_int(rng, 3, 10);
    std::vector<Scalar> f =
        trial % 3 == 0 ? rand_spiked_cycle(rng, len) : rand_consistent_cycle(rng, len);
    DecompTrace trace;
    OrientationDecomposition d = decompose_cycle(f, &trace);
    check_valid(d, f);
    CHECK(static_cast<int>(trace.steps.size()) <= len);
    // every step either lands the norm on 1 (and is final) or shrinks support
    for (size_t s = 0; s + 1 < trace.steps.size(); ++s) {
      CHECK(!trace.steps[s].reached_norm_one);
      CHECK(trace.steps[s + 1].support.size() < trace.steps[s].support.size());
    }
  }
}

TEST_CASE("orientations extend to rankings matching their bits") {
  CHECK(orientation_to_ranking({1, 1, 0}).order == std::vector<ClassId>{0, 1, 2});
  CHECK(orientation_to_ranking({0, 1, 1, 1}).order == std::vector<ClassId>{1, 2, 3, 0});
  CHECK_THROWS_AS(orientation_to_ranking({1, 1, 1}), Error);
  CHECK_THROWS_AS(orientation_to_ranking({0, 0, 0, 0}), Error);

  test::Rng rng(8002);
  for (int trial = 0; trial < 100; ++trial) {
    int len = test::rand_int(rng, 3, 9);
    std::vector<int> orientation(len);
    int ones = 0;
    for (int& bit : orientation) ones += bit = test::rand_int(rng, 0, 1);
    if (ones == 0 || ones == len) continue;
    Ranking r = orientation_to_ranking(orientation);
    for (int i = 0; i < len; ++i)
      CHECK(ranking_opinion(r, i, (i + 1) % len) == orientation[i]);
  }
}

TEST_CASE("the two-thirds cycle recovers the uniform cyclic mixture") {
  RankingDistribution w =
      cycle_to_ranking_distribution({Scalar(2, 3), Scalar(2, 3), Scalar(2, 3)});
  REQUIRE(w.weights().size() == 3);
  CHECK(w.weights().at({0, 1, 2}) == Scalar(1, 3));
  CHECK(w.weights().at({1, 2, 0}) == Scalar(1, 3));
  CHECK(w.weights().at({2, 0, 1}) == Scalar(1, 3));
}

TEST_CASE("cycle weights round-trip through ranking distributions") {
  test::Rng rng(8003);
  for (int trial = 0; trial < 60; ++trial) {
    int len = test::rand_int(rng, 3, 7);
    std::vector<Scalar> f =
        trial % 4 == 0 ? rand_spiked_cycle(rng, len) : rand_consistent_cycle(rng, len);
    RankingDistribution w = cycle_to_ranking_distribution(f);
    ExpertGraph log = build_log(w);
    for (int i = 0; i < len; ++i) CHECK(log.weight(i, (i + 1) % len) == f[i]);
  }
}

TEST_CASE("near-boundary cycles still decompose") {
  std::vector<Scalar> f{Scalar(1, 4), Scalar(1, 4), Scalar(1, 4), Scalar(1, 4) + Scalar(1, 1000)};
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(f, &trace);
  check_valid(d, f);
  RankingDistribution w = cycle_to_ranking_distribution(f);
  ExpertGraph log = build_log(w);
  for (int i = 0; i < 4; ++i) CHECK(log.weight(i, (i + 1) % 4) == f[i]);
}

TEST_CASE("the closed upper norm boundary decomposes") {
  // unequal entries summing to exactly length - 1: the complement has norm 1
  std::vector<Scalar> f{Scalar(9, 10), Scalar(3, 5), Scalar(1, 2)};
  DecompTrace trace;
  OrientationDecomposition d = decompose_cycle(f, &trace);
  check_valid(d, f);
}

TEST_CASE("decomposition feeds the table construction end to end") {
  test::Rng rng(8004);
  for (int trial = 0; trial < 10; ++trial) {
    int len = test::rand_int(rng, 3, 5);
    std::vector<Scalar> f = rand_consistent_cycle(rng, len, 12);
    Scalar epsilon(1, 25);
    ProbabilityTable table = log_to_expert_table(cycle_to_ranking_distribution(f), epsilon);
    ExpertGraph rebuilt = build_expert_graph(table, all_pairs(len));
    for (int i = 0; i < len; ++i)
      CHECK(abs(rebuilt.weight(i, (i + 1) % len) - f[i]) <= epsilon);
  }
}
