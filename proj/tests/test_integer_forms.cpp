#include <random>

#include "doctest.h"
#include "qtbraid/delaunay.hpp"
#include "qtbraid/integer_forms.hpp"
#include "test_support.hpp"

using namespace qtb;

namespace {

void check_normal_form(const IntMatrix& sigma) {
  const auto snf = skew_normal_form(sigma);
  const auto n = static_cast<int>(sigma.rows());
  CHECK(snf.transform * sigma * snf.transform.transpose() == skew_block_matrix(snf.blocks, n));
  CHECK(snf.transform * snf.inverse_transform == IntMatrix::Identity(n, n));
  CHECK(std::llabs(determinant(snf.transform)) == 1);
  for (auto d : snf.blocks) CHECK(d > 0);
  CHECK(snf.kernel_rank == n - 2 * static_cast<int>(snf.blocks.size()));
}

}  // namespace

TEST_CASE("skew normal form of small matrices") {
  const auto zero = skew_normal_form(IntMatrix::Zero(3, 3));
  CHECK(zero.blocks.empty());
  CHECK(zero.kernel_rank == 3);
  CHECK(zero.transform == IntMatrix::Identity(3, 3));
  IntMatrix j(2, 2);
  j << 0, 1, -1, 0;
  const auto one = skew_normal_form(j);
  CHECK(one.blocks == std::vector<std::int64_t>{1});
  CHECK(one.transform == IntMatrix::Identity(2, 2));
  CHECK(one.kernel_rank == 0);
}

TEST_CASE("skew normal form of random matrices") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        s(i, k) = entry(rng);
        s(k, i) = -s(i, k);
      }
    }
    check_normal_form(s);
  }
}

TEST_CASE("triangulation forms have unit blocks and kernel rank r") {
  std::mt19937_64 rng(4);
  for (int r = 4; r <= 8; ++r) {
    const auto t = delaunay(testing::random_points(rng, r));
    const auto sigma = sigma_matrix(t).entries();
    check_normal_form(sigma);
    const auto snf = skew_normal_form(sigma);
    CHECK(snf.kernel_rank == r);
    for (auto d : snf.blocks) CHECK(d == 1);
  }
}

TEST_CASE("smith form and congruences") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + trial % 5;
    const int cols = 1 + (trial / 5) % 5;
    IntMatrix m(rows, cols);
    for (auto& v : m.reshaped()) v = entry(rng);
    const auto sf = smith_form(m);
    const IntMatrix d = sf.left * m * sf.right;
    CHECK(d == sf.diagonal);
    for (int i = 0; i < rows; ++i) {
      for (int k = 0; k < cols; ++k) {
        if (i != k) CHECK(d(i, k) == 0);
      }
    }
    CHECK(std::llabs(determinant(sf.left)) == 1);
    CHECK(std::llabs(determinant(sf.right)) == 1);
    // A consistent right-hand side always has a solution.
    IntVector t0(cols);
    for (auto& v : t0) v = entry(rng);
    const IntVector rhs = m * t0;
    for (const std::int64_t modulus : {3, 5, 7, 9}) {
      const auto sol = solve_mod(m, rhs, modulus);
      REQUIRE(sol.has_value());
      const IntVector diff = m * *sol - rhs;
      for (auto v : diff) CHECK(positive_mod(v, modulus) == 0);
    }
  }
  IntMatrix m(2, 1);
  m << 1, 1;
  IntVector rhs(2);
  rhs << 0, 1;
  CHECK_FALSE(solve_mod(m, rhs, 5).has_value());
}

TEST_CASE("determinant") {
  IntMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 1;
  CHECK(determinant(m) == 0);
  IntMatrix swap(3, 3);
  swap << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(determinant(swap) == -1);
  m(2, 2) = 2;
  CHECK(determinant(m) == 6);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(positive_mod(-7, 3) == 2);
}
