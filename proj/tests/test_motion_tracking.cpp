#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/error.hpp"
#include "qtbraid/motion.hpp"
#include "qtbraid/tracking.hpp"
#include "test_support.hpp"

using namespace qtb;
using Eigen::Vector3d;

namespace {

std::vector<int> flip_labels(const std::vector<FlipEvent>& events) {
  std::vector<int> out;
  for (const auto& ev : events) out.insert(out.end(), ev.flips.begin(), ev.flips.end());
  return out;
}

// Equator points at angles 0, 90, 180 degrees and a fourth point crossing
// the equator at 270 degrees.
MotionPath flattening_path() {
  const double th = 0.3;
  return MotionPath({{Vector3d(1, 0, 0)},
                     {Vector3d(0, 1, 0)},
                     {Vector3d(-1, 0, 0)},
                     {Vector3d(0, -std::cos(th), std::sin(th)), Vector3d(0, -std::cos(th), -std::sin(th))}});
}

}  // namespace

TEST_CASE("motion paths") {
  std::mt19937_64 rng(81);
  const auto pts = testing::random_points(rng, 5);
  const auto still = MotionPath::stationary(pts);
  CHECK(still.is_closed());
  CHECK((still.at(0.37)[2] - pts[2]).norm() == 0.0);
  const auto loop = pure_braid_motion(0, 1, false, pts);
  CHECK(loop.is_closed());
  for (int i = 1; i < 5; ++i) CHECK((loop.at(0.5)[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(i)]).norm() == 0.0);
  CHECK((loop.end()[0] - pts[0]).norm() == 0.0);
  CHECK(loop.min_separation() > 1e-2);
  for (double t : {0.1, 0.4, 0.8}) CHECK(std::abs(loop.at(t)[0].norm() - 1.0) < 1e-12);
  const auto back = pure_braid_motion(0, 1, true, pts);
  for (double t : {0.0, 0.2, 0.6, 1.0}) CHECK((back.at(t)[0] - loop.at(1.0 - t)[0]).norm() < 1e-12);
  CHECK_THROWS_AS(pure_braid_motion(2, 2, false, pts), Error);
  CHECK_THROWS_AS(pure_braid_motion(0, 7, false, pts), Error);
}

TEST_CASE("colliding loops have no safe path") {
  // Puncture 3 sits on the arc from 1 to 2.
  const std::vector<Vector3d> pts{Vector3d(1, 0, 0), Vector3d(0, 1, 0), Vector3d(1, 1, 0).normalized(),
                                  Vector3d(0, 0, 1), Vector3d(0, 0, -1)};
  try {
    pure_braid_motion(0, 1, false, pts);
    FAIL("expected NoSafePath");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSafePath);
  }
  LoopOptions big;
  big.radius = 2.0;
  CHECK_THROWS_AS(pure_braid_motion(3, 0, false, pts, big), Error);
}

TEST_CASE("half twists trade places") {
  const std::vector<Vector3d> pts{Vector3d(1, 0.2, 0).normalized(), Vector3d(1, -0.2, 0).normalized(),
                                  Vector3d(-1, 0, 0), Vector3d(0, 0, 1), Vector3d(0, 0, -1)};
  const auto tw = half_twist_motion(0, 1, false, pts);
  CHECK((tw.end()[0] - pts[1]).norm() == 0.0);
  CHECK((tw.end()[1] - pts[0]).norm() == 0.0);
  CHECK_FALSE(tw.is_closed());
  const std::vector<Vector3d> blocked{Vector3d(1, 0, 0), Vector3d(0, 1, 0), Vector3d(1, 1, 0.1).normalized(),
                                      Vector3d(0, 0, -1)};
  CHECK_THROWS_AS(half_twist_motion(0, 1, false, blocked), Error);
}

TEST_CASE("constant motion has no events") {
  std::mt19937_64 rng(83);
  const auto pts = testing::random_points(rng, 6);
  const auto t0 = delaunay(pts);
  const auto res = track_flips(MotionPath::stationary(pts), t0);
  CHECK(res.events.empty());
  CHECK(triangulations_labelled_equal(res.final_triangulation, t0));
}

TEST_CASE("tracked loops return to the start triangulation") {
  std::mt19937_64 rng(89);
  int events = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const int r = 5 + trial % 2;
    const auto pts = testing::random_points(rng, r);
    const auto t0 = delaunay(pts);
    const int j = trial % r;
    const int k = (trial + 2) % r;
    const auto motion = pure_braid_motion(j, k, false, pts);
    const auto res = track_flips(motion, t0);
    events += static_cast<int>(res.events.size());
    for (std::size_t i = 1; i < res.events.size(); ++i) CHECK(res.events[i].t > res.events[i - 1].t);
    CHECK(triangulations_labelled_equal(apply_events(t0, res.events), res.final_triangulation));
    const auto perm = match_labels(res.final_triangulation, t0);
    REQUIRE(perm.has_value());
    // Puncture products stay 1 along the way and every exchanged diagonal
    // has a regular weight.
    IdealTriangulation cur = t0;
    for (const auto& ev : res.events) {
      const auto at = motion.at(ev.t);
      CHECK(ev.flips.size() == 1);
      const auto& ro = ev.roles.front();
      CHECK(std::set<int>{ro.v_minus, ro.v_plus, ro.v_left, ro.v_right}.size() == 4);
      const auto x = cross_ratio_weights(cur, at);
      const auto x1 = x[static_cast<std::size_t>(ev.flips.front())];
      CHECK(std::abs(x1) > 1e-6);
      CHECK(std::abs(x1 + 1.0) > 1e-6);
      cur = flip(cur, ev.flips.front()).triangulation;
      for (const auto& p : puncture_products(cur, cross_ratio_weights(cur, at))) CHECK(std::abs(p - 1.0) < 1e-10);
    }
    // The inverse loop retraces the same exchanges backwards.
    const auto inv = track_flips(pure_braid_motion(j, k, true, pts), res.final_triangulation);
    auto labels = flip_labels(res.events);
    std::reverse(labels.begin(), labels.end());
    CHECK(flip_labels(inv.events) == labels);
    CHECK(triangulations_labelled_equal(inv.final_triangulation, t0));
  }
  CHECK(events > 0);
}

TEST_CASE("halving the sampling step gives the same events") {
  std::mt19937_64 rng(97);
  const auto pts = testing::random_points(rng, 5);
  const auto t0 = delaunay(pts);
  const auto motion = pure_braid_motion(1, 3, false, pts);
  TrackingOptions fine;
  fine.step = 5e-4;
  const auto a = track_flips(motion, t0);
  const auto b = track_flips(motion, t0, fine);
  CHECK(flip_labels(a.events) == flip_labels(b.events));
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) CHECK(std::abs(a.events[i].t - b.events[i].t) < 1e-9);
}

TEST_CASE("flattening four punctures is one double exchange") {
  const auto motion = flattening_path();
  const auto t0 = delaunay(motion.start());
  const auto res = track_flips(motion, t0);
  REQUIRE(res.events.size() == 1);
  const auto& ev = res.events.front();
  CHECK(ev.flips.size() == 2);
  CHECK(std::abs(ev.t - 0.5) < 1e-9);
  CHECK(is_delaunay(res.final_triangulation, motion.end()));
  // The exchanged diagonals are the segments 1-3 and 2-4.
  std::set<int> diag{testing::edge_between(t0, 0, 2), testing::edge_between(t0, 1, 3)};
  CHECK(std::set<int>(ev.flips.begin(), ev.flips.end()) == diag);
  CHECK(res.final_triangulation.edge(ev.flips[0]).tail != t0.edge(ev.flips[0]).tail);
}

TEST_CASE("symmetric motions produce simultaneous events") {
  // Punctures in pairs exchanged by the half turn about the z axis; moving a
  // pair symmetrically makes its events coincide.
  std::mt19937_64 rng(101);
  auto half_turn = [](const Vector3d& v) { return Vector3d(-v.x(), -v.y(), v.z()); };
  int simultaneous = 0;
  for (int trial = 0; trial < 20 && simultaneous == 0; ++trial) {
    std::vector<Vector3d> base;
    base.push_back(Vector3d(0, 0, 1));
    for (int k = 0; k < 2; ++k) {
      const auto v = testing::random_unit(rng);
      base.push_back(v);
      base.push_back(half_turn(v));
    }
    const auto target = testing::random_unit(rng);
    std::vector<std::vector<Vector3d>> way;
    for (const auto& p : base) way.push_back({p});
    way[1].push_back(target);
    way[2].push_back(half_turn(target));
    try {
      const MotionPath motion(way);
      if (motion.min_separation() < 0.05) continue;
      track_flips(motion, delaunay(base));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SimultaneousEvents) ++simultaneous;
    }
  }
  CHECK(simultaneous > 0);
}
