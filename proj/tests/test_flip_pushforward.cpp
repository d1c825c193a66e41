#include <complex>
#include <random>

#include "doctest.h"
#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/error.hpp"
#include "qtbraid/flip_pushforward.hpp"
#include "qtbraid/projective.hpp"
#include "test_support.hpp"

using namespace qtb;
using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

struct Setup {
  std::vector<Eigen::Vector3d> points;
  IdealTriangulation t;
  QuantumTorusRep rep;
};

Setup make(std::mt19937_64& rng, int r, int big_n) {
  const auto pts = testing::random_points(rng, r);
  auto t = delaunay(pts);
  std::vector<int> n(static_cast<std::size_t>(r));
  std::uniform_int_distribution<int> e(0, big_n - 1);
  for (auto& v : n) v = e(rng);
  const ClassifyingData data{cross_ratio_weights(t, pts), n, 0};
  auto rep = build_irrep(t, data, RootOfUnityParams(big_n, 1));
  return {pts, t, std::move(rep)};
}

double max_matrix_gap(const QuantumTorusRep& a, const QuantumTorusRep& b) {
  double worst = 0.0;
  for (int i = 0; i < a.triangulation().edge_count(); ++i) {
    worst = std::max(worst, (a.generator(i) - b.generator(i)).norm() / b.generator(i).norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("pushforward central values follow the classical exchange") {
  std::mt19937_64 rng(41);
  int flips = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const auto s = make(rng, 4 + trial % 2, trial % 3 == 0 ? 5 : 3);
    const auto before = central_values(s.rep);
    for (int e = 0; e < s.t.edge_count(); ++e) {
      if (!is_flip_embedded(s.t, e)) continue;
      PushforwardReport report;
      const auto out = quantum_flip_pushforward(s.rep, e, {}, &report);
      const auto res = flip(s.t, e);
      CHECK(triangulations_labelled_equal(out.triangulation(), res.triangulation));
      const auto after = central_values(out);
      CHECK(central_distance(after, predicted_flip_values(before, res.roles)) < 1e-8);
      CentralValues geometric = after;
      geometric.x = cross_ratio_weights(res.triangulation, s.points);
      CHECK(central_distance(after, geometric) < 1e-8);
      const cd x1 = before.x[static_cast<std::size_t>(e)];
      CHECK(std::abs(after.x[static_cast<std::size_t>(e)] - 1.0 / x1) < 1e-8 * std::abs(1.0 / x1));
      for (std::size_t j = 0; j < after.p.size(); ++j) CHECK(std::abs(after.p[j] - before.p[j]) < 1e-8);
      CHECK(std::abs(after.h - before.h) < 1e-8);
      CHECK(report.relation_residual < 1e-8);
      ++flips;
    }
  }
  CHECK(flips > 20);
}

TEST_CASE("N-th power of (Id + qA) B") {
  std::mt19937_64 rng(43);
  const auto s = make(rng, 5, 3);
  const auto& sigma = s.rep.sigma();
  const auto cv = central_values(s.rep);
  const cd q = s.rep.params().q();
  const int d = s.rep.dimension();
  int checked = 0;
  for (int i = 0; i < s.t.edge_count(); ++i) {
    for (int j = 0; j < s.t.edge_count(); ++j) {
      if (sigma(i, j) != 1) continue;
      // A_i A_j = q^2 A_j A_i
      const MatrixXcd m = (MatrixXcd::Identity(d, d) + q * s.rep.generator(i)) * s.rep.generator(j);
      const cd want = (1.0 + cv.x[static_cast<std::size_t>(i)]) * cv.x[static_cast<std::size_t>(j)];
      const MatrixXcd p = matrix_power(m, 3);
      CHECK((p - want * MatrixXcd::Identity(d, d)).norm() < 1e-9 * std::abs(want) * d);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("diagonal weight -1 is singular") {
  const auto t = testing::tetrahedron();
  const int e12 = testing::edge_between(t, 0, 1);
  CrossRatioWeights x(6, cd(1.0, 0.0));
  for (auto [u, v] : {std::pair{0, 1}, std::pair{2, 3}, std::pair{0, 2}, std::pair{1, 3}}) {
    x[static_cast<std::size_t>(testing::edge_between(t, u, v))] = cd(-1.0, 0.0);
  }
  const auto rep = build_irrep(t, ClassifyingData{x, {0, 0, 0, 0}, 0}, RootOfUnityParams(3, 1));
  try {
    quantum_flip_pushforward(rep, e12);
    FAIL("expected SingularDiagonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularDiagonal);
  }
  CHECK_NOTHROW(quantum_flip_pushforward(rep, testing::edge_between(t, 0, 3)));
}

TEST_CASE("flip then unflip restores the matrices") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    const auto s = make(rng, 4 + trial % 2, 3);
    for (int e = 0; e < s.t.edge_count(); ++e) {
      if (!is_flip_embedded(s.t, e)) continue;
      const auto back = compose_flip_sequence(s.rep, {e, e});
      CHECK(triangulations_labelled_equal(back.triangulation(), s.t));
      CHECK(max_matrix_gap(back, s.rep) < 1e-8);
    }
  }
  const auto s = make(rng, 4, 3);
  CHECK(max_matrix_gap(compose_flip_sequence(s.rep, {}), s.rep) == 0.0);
}

TEST_CASE("pentagon") {
  std::mt19937_64 rng(53);
  int pentagons = 0;
  for (int trial = 0; trial < 4 && pentagons < 6; ++trial) {
    const auto s = make(rng, 5, 3);
    for (int a = 0; a < s.t.edge_count(); ++a) {
      for (int b = 0; b < s.t.edge_count(); ++b) {
        if (a == b) continue;
        // a and b must share a face.
        bool share = false;
        for (const auto& f : s.t.faces()) {
          int hits = 0;
          for (const auto& side : f) hits += (side.edge == a) + (side.edge == b);
          share = share || hits == 2;
        }
        if (!share) continue;
        std::vector<int> seq{a, b, a, b, a};
        IdealTriangulation cur = s.t;
        bool ok = true;
        for (int e : seq) {
          if (!is_flip_embedded(cur, e)) {
            ok = false;
            break;
          }
          cur = flip(cur, e).triangulation;
        }
        if (!ok) continue;
        std::vector<int> swap(static_cast<std::size_t>(s.t.edge_count()));
        for (int i = 0; i < s.t.edge_count(); ++i) swap[static_cast<std::size_t>(i)] = i;
        swap[static_cast<std::size_t>(a)] = b;
        swap[static_cast<std::size_t>(b)] = a;
        if (!triangulations_labelled_equal(cur, relabel(s.t, swap))) continue;
        const auto pushed = compose_flip_sequence(s.rep, seq);
        for (int i = 0; i < s.t.edge_count(); ++i) {
          const auto dist = projective_distance(pushed.generator(i),
                                                s.rep.generator(swap[static_cast<std::size_t>(i)]));
          CHECK(dist.distance < 1e-7);
          CHECK(std::abs(dist.scalar - 1.0) < 1e-7);
        }
        ++pentagons;
      }
    }
  }
  CHECK(pentagons > 0);
}

TEST_CASE("re-standardization cadence does not change the pushforward") {
  std::mt19937_64 rng(59);
  const auto s = make(rng, 5, 3);
  // A walk of random embedded flips.
  std::vector<int> seq;
  IdealTriangulation cur = s.t;
  std::uniform_int_distribution<int> pick(0, s.t.edge_count() - 1);
  while (seq.size() < 20) {
    const int e = pick(rng);
    if (!is_flip_embedded(cur, e)) continue;
    const auto res = flip(cur, e);
    if (res.roles.v_left == res.roles.v_right) continue;
    seq.push_back(e);
    cur = res.triangulation;
  }
  FlipSequenceOptions never;
  never.restandardize_every = 0;
  // Without re-standardization the per-flip scalar checks lose accuracy.
  never.pushforward.verify = false;
  FlipSequenceOptions often;
  often.restandardize_every = 3;
  const auto a = compose_flip_sequence(s.rep, seq, never);
  const auto b = compose_flip_sequence(s.rep, seq, often);
  const auto c = compose_flip_sequence(s.rep, seq);
  CHECK(max_matrix_gap(a, b) < 1e-8);
  CHECK(max_matrix_gap(a, c) < 1e-8);
  FlipPusher pusher(s.rep, often);
  for (int e : seq) pusher.push(e);
  CHECK(pusher.min_schur_gap() > 1e-4);
  CHECK(pusher.max_null_singular() < 1e-8);
}
