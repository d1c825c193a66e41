#include "qtbraid/integer_forms.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "qtbraid/error.hpp"

namespace qtb {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

// Congruence operations on a skew matrix, mirrored on U and U^{-1}.
struct SkewReducer {
  IntMatrix a;
  IntMatrix u;
  IntMatrix u_inv;

  void swap(int i, int j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
    u.row(i).swap(u.row(j));
    u_inv.col(i).swap(u_inv.col(j));
  }

  // E = I + c e_m e_p^T
  void add(int m, int p, std::int64_t c) {
    if (c == 0) return;
    a.row(m) += c * a.row(p);
    a.col(m) += c * a.col(p);
    u.row(m) += c * u.row(p);
    u_inv.col(p) -= c * u_inv.col(m);
  }
};

}  // namespace

SkewNormalForm skew_normal_form(const IntMatrix& sigma) {
  const int n = static_cast<int>(sigma.rows());
  if (sigma.cols() != n || sigma != -sigma.transpose()) {
    throw Error(ErrorCode::InvalidArgument, "skew_normal_form needs an antisymmetric matrix");
  }
  SkewReducer red{sigma, IntMatrix::Identity(n, n), IntMatrix::Identity(n, n)};
  SkewNormalForm out;
  int b = 0;
  while (b + 1 < n) {
    int pi = -1;
    int pj = -1;
    std::int64_t best = 0;
    for (int i = b; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t v = std::llabs(red.a(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0) break;
    red.swap(b, pi);
    if (pj == b) pj = pi;
    red.swap(b + 1, pj);
    if (red.a(b, b + 1) < 0) red.swap(b, b + 1);
    const std::int64_t d = red.a(b, b + 1);
    bool clean = true;
    for (int m = b + 2; m < n; ++m) {
      red.add(m, b + 1, -floor_div(red.a(b, m), d));
      red.add(m, b, floor_div(red.a(b + 1, m), d));
      if (red.a(b, m) != 0 || red.a(b + 1, m) != 0) clean = false;
    }
    if (!clean) continue;
    out.blocks.push_back(d);
    b += 2;
  }
  out.transform = std::move(red.u);
  out.inverse_transform = std::move(red.u_inv);
  out.kernel_rank = n - 2 * static_cast<int>(out.blocks.size());
  return out;
}

IntMatrix skew_block_matrix(const std::vector<std::int64_t>& blocks, int size) {
  IntMatrix m = IntMatrix::Zero(size, size);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    m(i, i + 1) = blocks[k];
    m(i + 1, i) = -blocks[k];
  }
  return m;
}

SmithForm smith_form(const IntMatrix& input) {
  const auto rows = input.rows();
  const auto cols = input.cols();
  IntMatrix a = input;
  IntMatrix p = IntMatrix::Identity(rows, rows);
  IntMatrix q = IntMatrix::Identity(cols, cols);
  const auto steps = std::min(rows, cols);
  for (Eigen::Index k = 0; k < steps; ++k) {
    while (true) {
      Eigen::Index bi = -1;
      Eigen::Index bj = -1;
      std::int64_t best = 0;
      for (Eigen::Index i = k; i < rows; ++i) {
        for (Eigen::Index j = k; j < cols; ++j) {
          const std::int64_t v = std::llabs(a(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (best == 0) break;
      a.row(k).swap(a.row(bi));
      p.row(k).swap(p.row(bi));
      a.col(k).swap(a.col(bj));
      q.col(k).swap(q.col(bj));
      const std::int64_t d = a(k, k);
      bool clean = true;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        const std::int64_t f = floor_div(a(i, k), d);
        a.row(i) -= f * a.row(k);
        p.row(i) -= f * p.row(k);
        if (a(i, k) != 0) clean = false;
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        const std::int64_t f = floor_div(a(k, j), d);
        a.col(j) -= f * a.col(k);
        q.col(j) -= f * q.col(k);
        if (a(k, j) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  return SmithForm{std::move(p), std::move(q), std::move(a)};
}

namespace {

// Inverse of a modulo m when gcd(a, m) == 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = positive_mod(a, m);
  std::int64_t r = m;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  return positive_mod(old_s, m);
}

}  // namespace

std::optional<IntVector> solve_mod(const IntMatrix& m, const IntVector& rhs, std::int64_t modulus) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "solve_mod size mismatch");
  const SmithForm sf = smith_form(m);
  IntVector f = sf.left * rhs;
  for (auto& v : f) v = positive_mod(v, modulus);
  IntVector y = IntVector::Zero(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const std::int64_t d = i < m.cols() ? positive_mod(sf.diagonal(i, i), modulus) : 0;
    const std::int64_t g = std::gcd(d, modulus);
    if (f(i) % g != 0) return std::nullopt;
    if (i >= m.cols() || d == 0) continue;
    const std::int64_t reduced = modulus / g;
    y(i) = positive_mod((f(i) / g) * inverse_mod(d / g, reduced), reduced);
  }
  IntVector t = sf.right * y;
  for (auto& v : t) v = positive_mod(v, modulus);
  return t;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square");
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  const auto n = a.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace qtb
