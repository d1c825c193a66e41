#pragma once

// Integer lattice reductions used to build standard representations.

#include <cstdint>
#include <optional>
#include <vector>

#include "qtbraid/triangulation.hpp"

namespace qtb {

/// U * sigma * U^T = diag(d_1 J, ..., d_k J, 0), J = [[0, 1], [-1, 0]],
/// with U unimodular and every d_i > 0.
struct SkewNormalForm {
  IntMatrix transform;          // U
  IntMatrix inverse_transform;  // U^{-1}
  std::vector<std::int64_t> blocks;
  int kernel_rank = 0;
};

SkewNormalForm skew_normal_form(const IntMatrix& sigma);

/// Block-diagonal matrix the normal form promises (for verification).
IntMatrix skew_block_matrix(const std::vector<std::int64_t>& blocks, int size);

/// P * M * Q = D with D diagonal and P, Q unimodular.
struct SmithForm {
  IntMatrix left;   // P
  IntMatrix right;  // Q
  IntMatrix diagonal;
};

SmithForm smith_form(const IntMatrix& m);

/// Some t with M t = rhs (mod modulus), or nullopt when none exists.
std::optional<IntVector> solve_mod(const IntMatrix& m, const IntVector& rhs, std::int64_t modulus);

std::int64_t determinant(const IntMatrix& m);

std::int64_t floor_div(std::int64_t a, std::int64_t b);

std::int64_t positive_mod(std::int64_t a, std::int64_t m);

}  // namespace qtb
