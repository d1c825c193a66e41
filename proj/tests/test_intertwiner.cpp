#include <complex>
#include <random>

#include "doctest.h"
#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/error.hpp"
#include "qtbraid/intertwiner.hpp"
#include "qtbraid/projective.hpp"
#include "test_support.hpp"

using namespace qtb;
using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

QuantumTorusRep make(std::mt19937_64& rng, int r, int big_n, std::vector<int> n) {
  const auto pts = testing::random_points(rng, r);
  const auto t = delaunay(pts);
  return build_irrep(t, ClassifyingData{cross_ratio_weights(t, pts), std::move(n), 0},
                     RootOfUnityParams(big_n, 1));
}

}  // namespace

TEST_CASE("intertwiner of a representation with itself is the identity") {
  std::mt19937_64 rng(61);
  const auto rep = make(rng, 4, 5, {0, 1, 2, 3});
  const auto l = intertwiner(rep, rep);
  CHECK((l.matrix - MatrixXcd::Identity(5, 5)).norm() < 1e-10);
  CHECK(l.smallest_singular < 1e-8);
  CHECK(l.second_singular > 1e-4);
  CHECK(l.residual < 1e-10);
}

TEST_CASE("intertwiner recovers a conjugating matrix") {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    const int r = 4 + trial % 2;
    const auto rep = make(rng, r, 3, std::vector<int>(static_cast<std::size_t>(r), 1));
    const int d = rep.dimension();
    MatrixXcd gmat(d, d);
    for (auto& v : gmat.reshaped()) v = cd(g(rng), g(rng));
    const auto conj = rep.conjugated(gmat);
    const auto l = intertwiner(rep, conj);
    CHECK(projective_distance(l.matrix, gmat).distance < 1e-8);
    CHECK(l.smallest_singular < 1e-8);
    CHECK(l.second_singular > 1e-4);
  }
}

TEST_CASE("different puncture weights are not isomorphic") {
  std::mt19937_64 rng(71);
  const auto pts = testing::random_points(rng, 4);
  const auto t = delaunay(pts);
  const auto x = cross_ratio_weights(t, pts);
  const RootOfUnityParams params(3, 1);
  const auto a = build_irrep(t, ClassifyingData{x, {0, 0, 0, 0}, 0}, params);
  const auto b = build_irrep(t, ClassifyingData{x, {1, 0, 0, 2}, 0}, params);
  try {
    intertwiner(a, b);
    FAIL("expected NotIsomorphic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIsomorphic);
  }
}

TEST_CASE("a direct sum is not irreducible") {
  std::mt19937_64 rng(73);
  const auto rep = make(rng, 4, 3, {0, 0, 0, 0});
  std::vector<MatrixXcd> gens;
  std::vector<MatrixXcd> invs;
  for (int i = 0; i < 6; ++i) {
    MatrixXcd a = MatrixXcd::Zero(6, 6);
    MatrixXcd b = MatrixXcd::Zero(6, 6);
    a.topLeftCorner(3, 3) = a.bottomRightCorner(3, 3) = rep.generator(i);
    b.topLeftCorner(3, 3) = b.bottomRightCorner(3, 3) = rep.inverse(i);
    gens.push_back(a);
    invs.push_back(b);
  }
  const QuantumTorusRep doubled(rep.triangulation(), rep.params(), gens, invs);
  try {
    intertwiner(doubled, doubled);
    FAIL("expected NotIrreducible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIrreducible);
  }
}
