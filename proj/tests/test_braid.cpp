#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "doctest.h"
#include "qtbraid/braid_word.hpp"
#include "qtbraid/error.hpp"
#include "qtbraid/motion.hpp"
#include "qtbraid/projective.hpp"
#include "qtbraid/representation.hpp"
#include "test_support.hpp"

using namespace qtb;
using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

RepresentationContext context(std::mt19937_64& rng, int r, int big_n) {
  RepresentationContext ctx;
  ctx.points = testing::random_points(rng, r, 0.4);
  ctx.params = RootOfUnityParams(big_n, 1);
  std::uniform_int_distribution<int> e(0, big_n - 1);
  for (int j = 0; j < r; ++j) ctx.n.push_back(e(rng));
  return ctx;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

bool on_arc(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& s) {
  return angle_between(a, s) + angle_between(s, b) < angle_between(a, b) + 1e-9;
}

bool arcs_cross(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                const Eigen::Vector3d& d) {
  const Eigen::Vector3d p = a.cross(b).cross(c.cross(d)).normalized();
  for (const Eigen::Vector3d s : {p, Eigen::Vector3d(-p)})
    if (on_arc(a, b, s) && on_arc(c, d, s)) return true;
  return false;
}

}  // namespace

TEST_CASE("parsing braid words") {
  const auto w = parse_braid("a12 a23^-1", 4);
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == BraidGenerator{BraidGenerator::Kind::Pure, 0, 1, false});
  CHECK(w.letters[1] == BraidGenerator{BraidGenerator::Kind::Pure, 1, 2, true});
  CHECK(w.text() == "a12 a23^-1");
  CHECK(parse_braid("s1 s1", 4).letters.size() == 2);
  CHECK(parse_braid("", 4).empty());
  CHECK(parse_braid("a10,11", 12).text() == "a10,11");
  CHECK(code_of([] { parse_braid("s1", 4); }) == ErrorCode::NotPure);
  CHECK(code_of([] { parse_braid("a15", 4); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_braid("a21", 4); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_braid("s4 s4", 4); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_braid("a12 b3", 4); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_braid("a12^2", 4); }) == ErrorCode::SyntaxError);
  try {
    parse_braid("a12 a13 x", 4);
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  const auto mixed = parse_braid_unchecked("s1 a23 s2^-1", 4);
  CHECK(mixed.inverse().text() == "s2 a23^-1 s1^-1");
  CHECK(induced_permutation(mixed) == std::vector<int>{1, 2, 0, 3});
  CHECK((w * w.inverse()).letters.size() == 4);
}

TEST_CASE("projective distance") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  MatrixXcd m(4, 4);
  for (auto& v : m.reshaped()) v = cd(g(rng), g(rng));
  const cd c(0.3, -2.0);
  const auto d = projective_distance(m, c * m);
  CHECK(d.distance < 1e-14);
  CHECK(std::abs(d.scalar - 1.0 / c) < 1e-12);
  const auto e = projective_distance(c * m, m);
  CHECK(std::abs(e.scalar - c) < 1e-12);
  MatrixXcd flip = MatrixXcd::Identity(3, 3);
  flip(2, 2) = -1.0;
  CHECK(projective_distance(MatrixXcd::Identity(3, 3), flip).distance > 0.4);
  MatrixXcd other(4, 4);
  for (auto& v : other.reshaped()) v = cd(g(rng), g(rng));
  CHECK(std::abs(projective_distance(m, other).distance - projective_distance(other, m).distance) < 1e-12);
  CHECK(code_of([] { projective_distance(MatrixXcd::Zero(2, 2), MatrixXcd::Identity(2, 2)); }) ==
        ErrorCode::ZeroMatrix);
  CHECK(code_of([] { ProjectiveMatrix(MatrixXcd::Zero(2, 2)); }) == ErrorCode::ZeroMatrix);
}

TEST_CASE("trivial words and r = 3") {
  std::mt19937_64 rng(5);
  for (int r : {3, 4, 5}) {
    for (int big_n : {3, 5}) {
      if (r == 5 && big_n == 5) continue;
      const auto ctx = context(rng, r, big_n);
      const auto id = representation(BraidWord{r, {}}, ctx);
      CHECK(projective_distance(id, ProjectiveMatrix::identity(id.dimension())).distance < 1e-10);
    }
  }
  const auto ctx = context(rng, 3, 5);
  const auto res = braid_representation(parse_braid("a12 a13^-1 a23", 3), ctx);
  CHECK(res.matrix.dimension() == 1);
  CHECK(res.flip_count == 0);
}

TEST_CASE("a12 at r = 4, N = 3") {
  std::mt19937_64 rng(7);
  const auto ctx = context(rng, 4, 3);
  const auto res = braid_representation(parse_braid("a12", 4), ctx);
  CHECK(res.matrix.dimension() == 3);
  CHECK(res.weight_mismatch < 1e-9);
  CHECK(res.data_mismatch < 1e-8);
  CHECK(res.solve.smallest_singular < 1e-8);
  CHECK(res.solve.second_singular > 1e-4);
  CHECK(res.flip_count > 0);
  const auto w = parse_braid("a12 a34^-1 a13", 4);
  const auto inv = representation(w * w.inverse(), ctx);
  CHECK(projective_distance(inv, ProjectiveMatrix::identity(3)).distance < 1e-6);
  const auto rw = representation(w, ctx);
  const auto rinv = representation(w.inverse(), ctx);
  CHECK(projective_distance(rinv, rw.inverse()).distance < 1e-6);
}

TEST_CASE("homomorphism on random words") {
  std::mt19937_64 rng(11);
  const auto ctx = context(rng, 4, 3);
  std::vector<std::pair<BraidWord, BraidWord>> pairs;
  for (int i = 0; i < 3; ++i) pairs.emplace_back(random_pure_word(4, 2, rng), random_pure_word(4, 2, rng));
  const auto report = verify_homomorphism(pairs, ctx);
  CHECK(report.pass);
  CHECK(report.worst < 1e-6);
}

TEST_CASE("disjoint generators commute at r = 5") {
  std::mt19937_64 rng(13);
  auto ctx = context(rng, 5, 3);
  while (arcs_cross(ctx.points[0], ctx.points[1], ctx.points[2], ctx.points[3])) ctx = context(rng, 5, 3);
  const auto a = representation(parse_braid("a12", 5), ctx);
  const auto b = representation(parse_braid("a34", 5), ctx);
  const auto ab = representation(parse_braid("a12 a34", 5), ctx);
  CHECK(projective_distance(ab, a * b).distance < 1e-6);
  CHECK(projective_distance(ab, b * a).distance < 1e-6);
}

TEST_CASE("loop realizations do not matter") {
  std::mt19937_64 rng(17);
  const auto ctx = context(rng, 4, 3);
  LoopOptions small;
  small.radius = 0.0;
  LoopOptions tight = small;
  tight.radius = 0.5 * std::acos(ctx.points[0].dot(ctx.points[1]));
  tight.radius = std::min(tight.radius, 0.1);
  LoopOptions bent = small;
  bent.bulge = 0.05;
  const auto report = isotopy_invariance_check(parse_braid("a12", 4), ctx, {small, tight, bent});
  CHECK(report.pass);
  CHECK(report.distances.size() == 3);
}

TEST_CASE("re-standardization cadence and sampling step do not matter") {
  std::mt19937_64 rng(19);
  auto ctx = context(rng, 4, 5);
  const auto w = parse_braid("a13 a24^-1 a12", 4);
  const auto base = representation(w, ctx);
  auto often = ctx;
  often.flips.restandardize_every = 1;
  CHECK(projective_distance(representation(w, often), base).distance < 1e-6);
  auto never = ctx;
  never.flips.restandardize_every = 0;
  never.flips.pushforward.verify = false;
  CHECK(projective_distance(representation(w, never), base).distance < 1e-6);
  auto fine = ctx;
  fine.tracking.step = 5e-4;
  const auto a = braid_representation(w, ctx);
  const auto b = braid_representation(w, fine);
  CHECK(a.flip_count == b.flip_count);
  CHECK(projective_distance(a.matrix, b.matrix).distance < 1e-9);
}

TEST_CASE("impure words are rejected") {
  std::mt19937_64 rng(23);
  const auto ctx = context(rng, 4, 3);
  CHECK(code_of([&] { representation(parse_braid_unchecked("s1", 4), ctx); }) == ErrorCode::NotPure);
}

TEST_CASE("trace scan") {
  std::mt19937_64 rng(29);
  const auto ctx = context(rng, 4, 3);
  const auto rows = trace_scan(BraidWord{4, {}}, ctx, {3, 5});
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(rows[0].abs_trace - 3.0) < 1e-9);
  CHECK(std::abs(rows[1].abs_trace - 5.0) < 1e-9);
  const auto a12 = trace_scan(parse_braid("a12", 4), ctx, {3, 5, 7});
  for (const auto& row : a12) {
    CHECK(std::isfinite(row.abs_trace));
    CHECK(row.abs_trace > 0.0);
  }
  const auto r3 = context(rng, 3, 3);
  CHECK(std::abs(trace_scan(parse_braid("a12", 3), r3, {3})[0].abs_trace - 1.0) < 1e-12);
}
