#include <limits>
#include <random>

#include "doctest.h"
#include "qtbraid/checks.hpp"
#include "test_support.hpp"

using namespace qtb;

TEST_CASE("checks pass on small batches") {
  std::mt19937_64 rng(31);
  const std::vector<PointSet> configs{testing::random_points(rng, 4), testing::random_points(rng, 5)};
  CHECK(check_relations(configs, {3}, rng).pass);
  CHECK(check_classification(configs, {3}, rng).pass);
  CHECK(check_puncture_products(configs).pass);
  const auto coherence = check_flip_coherence(configs, {3}, 12, rng);
  CHECK(coherence.pass);
  CHECK(coherence.cases == 12);
  CHECK(check_flip_involution(configs, 3, rng).pass);
  CHECK(check_pentagon({testing::random_points(rng, 5)}, 3, rng).pass);
  CHECK(check_flattening().pass);
  CHECK(check_trivial({testing::random_points(rng, 3)}, {3}, rng).pass);
}

TEST_CASE("checks fail honestly") {
  std::mt19937_64 rng(37);
  // A pentagon needs five distinct corners.
  const auto none = check_pentagon({testing::random_points(rng, 4)}, 3, rng);
  CHECK_FALSE(none.pass);
  CHECK(none.detail == "no pentagon found");
  CHECK_FALSE(check_relations({}, {3}, rng).pass);

  SchurStats stats;
  CHECK_FALSE(check_schur(stats).pass);
  stats.solves = 2;
  stats.max_null = 1e-12;
  stats.min_gap = 1e-5;
  CHECK_FALSE(check_schur(stats).pass);
  stats.min_gap = 1e-2;
  CHECK(check_schur(stats).pass);

  HomomorphismReport report;
  report.pairs.push_back({"a12", "a13", std::numeric_limits<double>::infinity(), {}, "NoSafePath: blocked"});
  const auto hom = check_homomorphism(report);
  CHECK_FALSE(hom.pass);
  CHECK(hom.detail == "NoSafePath: blocked");
}

TEST_CASE("random word pairs are pure and reproducible") {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  const auto pa = random_word_pairs(4, 3, 2, a);
  const auto pb = random_word_pairs(4, 3, 2, b);
  REQUIRE(pa.size() == 3);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    CHECK(pa[i].first == pb[i].first);
    CHECK(pa[i].first.letters.size() == 2);
    CHECK(parse_braid(pa[i].second.text(), 4) == pa[i].second);
  }
}
