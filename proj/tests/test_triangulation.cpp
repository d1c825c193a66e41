#include <algorithm>
#include <numeric>
#include <random>

#include <Eigen/Geometry>

#include "doctest.h"
#include "qtbraid/error.hpp"
#include "qtbraid/triangulation.hpp"
#include "test_support.hpp"

using namespace qtb;
using qtb::testing::edge_between;

namespace {

void check_sigma_shape(const SigmaMatrix& s) {
  CHECK(s.entries() == -s.entries().transpose());
  CHECK(s.entries().maxCoeff() <= 2);
  CHECK(s.entries().minCoeff() >= -2);
}

}  // namespace

TEST_CASE("three-punctured sphere has zero sigma and no embedded flips") {
  const auto t = testing::three_punctured();
  CHECK(t.edge_count() == 3);
  CHECK(t.face_count() == 2);
  CHECK(sigma_matrix(t).entries() == IntMatrix::Zero(3, 3));
  for (int e = 0; e < 3; ++e) {
    CHECK_FALSE(is_flip_embedded(t, e));
    CHECK_THROWS_AS(flip(t, e), Error);
  }
  for (int j = 0; j < 3; ++j) CHECK(puncture_star(t, j).size() == 2);
}

TEST_CASE("tetrahedron sigma") {
  const auto t = testing::tetrahedron();
  const auto s = sigma_matrix(t);
  check_sigma_shape(s);
  const int e12 = edge_between(t, 0, 1);
  const int e13 = edge_between(t, 0, 2);
  CHECK(std::llabs(s(e12, e13)) == 1);
  // Opposite edges never share a corner.
  CHECK(s(e12, edge_between(t, 2, 3)) == 0);
}

TEST_CASE("flip of the tetrahedron") {
  const auto t = testing::tetrahedron();
  const int e12 = edge_between(t, 0, 1);
  CHECK(is_flip_embedded(t, e12));
  const auto res = flip(t, e12);
  CHECK(res.triangulation.edge_count() == 6);
  const auto& ends = res.triangulation.edge(e12);
  CHECK(ends.tail == 2);
  CHECK(ends.head == 3);
  CHECK(res.roles.diagonal == e12);
  CHECK(res.roles.v_minus == 0);
  CHECK(res.roles.v_plus == 1);
  CHECK(edge_between(t, res.roles.v_left, res.roles.v_plus) == res.roles.top);
  CHECK(edge_between(t, res.roles.v_plus, res.roles.v_right) == res.roles.right);
  CHECK(edge_between(t, res.roles.v_right, res.roles.v_minus) == res.roles.bottom);
  CHECK(edge_between(t, res.roles.v_minus, res.roles.v_left) == res.roles.left);
  CHECK_FALSE(triangulations_labelled_equal(t, res.triangulation));
  const auto back = flip(res.triangulation, e12);
  CHECK(triangulations_labelled_equal(t, back.triangulation));
  CHECK(triangulations_labelled_equal(t, t));
  for (int e = 0; e < 6; ++e) CHECK(is_flip_embedded(t, e));
}

TEST_CASE("role orientation against face orientation") {
  const auto t = testing::tetrahedron();
  const auto res = flip(t, 0);
  const auto& pts = testing::regular_tetrahedron();
  // v_left lies to the left of v_minus -> v_plus seen from outside.
  const auto& a = pts[static_cast<std::size_t>(res.roles.v_minus)];
  const auto& b = pts[static_cast<std::size_t>(res.roles.v_plus)];
  const auto& l = pts[static_cast<std::size_t>(res.roles.v_left)];
  CHECK(a.cross(b).dot(l) > 0.0);
}

TEST_CASE("bad labels") {
  const auto t = testing::tetrahedron();
  CHECK_THROWS_AS(flip(t, 6), Error);
  try {
    is_flip_embedded(t, -1);
    FAIL("expected NotAnEdge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEdge);
  }
}

TEST_CASE("puncture stars") {
  const auto t = testing::tetrahedron();
  auto star = puncture_star(t, 0);
  std::sort(star.begin(), star.end());
  std::vector<int> expected{edge_between(t, 0, 1), edge_between(t, 0, 2), edge_between(t, 0, 3)};
  std::sort(expected.begin(), expected.end());
  CHECK(star == expected);
  std::mt19937_64 rng(7);
  const auto big = delaunay(testing::random_points(rng, 7));
  std::size_t total = 0;
  for (int j = 0; j < 7; ++j) total += puncture_star(big, j).size();
  CHECK(total == 2 * static_cast<std::size_t>(big.edge_count()));
}

TEST_CASE("loop edges are not simple") {
  const std::vector<EdgeEnds> edges{{0, 0}, {0, 1}, {0, 2}};
  const std::vector<Face> faces{
      Face{Side{0, false}, Side{1, false}, Side{1, true}},
      Face{Side{0, true}, Side{2, false}, Side{2, true}},
  };
  const IdealTriangulation t(3, edges, faces);
  CHECK_FALSE(is_simple(t));
  CHECK(is_simple(testing::tetrahedron()));
  // Both sides of edge 1 lie on the same face.
  CHECK_FALSE(is_flip_embedded(t, 1));
  CHECK(puncture_star(t, 1).size() == 1);
  CHECK(puncture_star(t, 0).size() == 4);
  check_sigma_shape(sigma_matrix(t));
}

TEST_CASE("exchanges that create a loop edge") {
  std::mt19937_64 rng(17);
  int loops = 0;
  for (int trial = 0; trial < 200 && loops < 5; ++trial) {
    IdealTriangulation t = delaunay(testing::random_points(rng, 4 + trial % 2));
    std::uniform_int_distribution<int> pick(0, t.edge_count() - 1);
    for (int step = 0; step < 6; ++step) {
      const int e = pick(rng);
      if (!is_flip_embedded(t, e)) continue;
      const FlipResult res = flip(t, e);
      if (res.roles.v_left == res.roles.v_right) {
        const auto& d = res.triangulation.edge(e);
        CHECK(d.tail == d.head);
        CHECK_FALSE(is_simple(res.triangulation));
        check_sigma_shape(sigma_matrix(res.triangulation));
        REQUIRE(is_flip_embedded(res.triangulation, e));
        CHECK(triangulations_labelled_equal(flip(res.triangulation, e).triangulation, t));
        ++loops;
      }
      t = res.triangulation;
    }
  }
  CHECK(loops > 0);
}

TEST_CASE("invalid triangulations are rejected") {
  CHECK_THROWS_AS(IdealTriangulation(3, {{0, 1}, {1, 2}}, {}), Error);
  const std::vector<EdgeEnds> edges{{0, 1}, {1, 2}, {0, 2}};
  // Both faces walk every edge in the same direction.
  const std::vector<Face> same{Face{Side{0, false}, Side{1, false}, Side{2, true}},
                               Face{Side{0, false}, Side{1, false}, Side{2, true}}};
  CHECK_THROWS_AS(IdealTriangulation(3, edges, same), Error);
}

TEST_CASE("random Delaunay triangulations and flips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 4 + trial % 4;
    const auto t = delaunay(testing::random_points(rng, r));
    CHECK(t.edge_count() == 3 * r - 6);
    CHECK(is_simple(t));
    check_sigma_shape(sigma_matrix(t));
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!is_flip_embedded(t, e)) continue;
      const auto res = flip(t, e);
      check_sigma_shape(sigma_matrix(res.triangulation));
      const auto& ro = res.roles;
      const bool distinct = ro.v_left != ro.v_right;
      if (distinct) CHECK(is_simple(res.triangulation));
      CHECK(triangulations_labelled_equal(flip(res.triangulation, e).triangulation, t));
    }
  }
}

TEST_CASE("relabel and match_labels") {
  std::mt19937_64 rng(3);
  const auto t = delaunay(testing::random_points(rng, 6));
  std::vector<int> perm(static_cast<std::size_t>(t.edge_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto shuffled = relabel(t, perm);
  const auto found = match_labels(shuffled, t);
  REQUIRE(found.has_value());
  CHECK(triangulations_labelled_equal(relabel(shuffled, *found), t));
  for (std::size_t i = 0; i < perm.size(); ++i) {
    CHECK((*found)[static_cast<std::size_t>(perm[i])] == static_cast<int>(i));
  }
}
