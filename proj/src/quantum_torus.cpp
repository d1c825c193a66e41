#include "qtbraid/quantum_torus.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/LU>

#include "qtbraid/error.hpp"
#include "qtbraid/integer_forms.hpp"

namespace qtb {

using Eigen::MatrixXcd;
using cd = std::complex<double>;

int forced_charge_sign(const CrossRatioWeights& x) {
  cd prod{1.0, 0.0};
  for (const auto& v : x) prod *= v;
  return prod.real() >= 0.0 ? 1 : -1;
}

std::vector<cd> puncture_weights(const ClassifyingData& data, const RootOfUnityParams& params) {
  std::vector<cd> p;
  p.reserve(data.n.size());
  for (int nj : data.n) p.push_back(params.q_pow(2 * static_cast<std::int64_t>(nj)));
  return p;
}

cd charge(const ClassifyingData& data, const RootOfUnityParams& params) {
  const std::int64_t total = std::accumulate(data.n.begin(), data.n.end(), std::int64_t{0});
  const int sign = data.h_sign == 0 ? forced_charge_sign(data.x) : data.h_sign;
  return static_cast<double>(sign) * params.q_pow(total);
}

QuantumTorusRep::QuantumTorusRep(IdealTriangulation t, RootOfUnityParams params,
                                 std::vector<MatrixXcd> generators, std::vector<MatrixXcd> inverses)
    : triangulation_(std::move(t)),
      sigma_(sigma_matrix(triangulation_)),
      params_(params),
      dimension_(0),
      generators_(std::move(generators)),
      inverses_(std::move(inverses)) {
  const auto n = static_cast<std::size_t>(triangulation_.edge_count());
  if (generators_.size() != n || inverses_.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "one generator and one inverse per edge required");
  }
  dimension_ = static_cast<int>(generators_.front().rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (const MatrixXcd* m : {&generators_[i], &inverses_[i]}) {
      if (m->rows() != dimension_ || m->cols() != dimension_) {
        throw Error(ErrorCode::InvalidArgument, "generator matrices must share one square size");
      }
    }
  }
}

QuantumTorusRep QuantumTorusRep::conjugated(const MatrixXcd& g) const {
  const Eigen::PartialPivLU<MatrixXcd> lu(g);
  std::vector<MatrixXcd> gens;
  std::vector<MatrixXcd> invs;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    gens.push_back(lu.solve(generators_[i] * g));
    invs.push_back(lu.solve(inverses_[i] * g));
  }
  return QuantumTorusRep(triangulation_, params_, std::move(gens), std::move(invs));
}

QuantumTorusRep QuantumTorusRep::transported(const MatrixXcd& g) const {
  const Eigen::PartialPivLU<MatrixXcd> lu(g);
  return conjugated(lu.inverse());
}

namespace {

cd log_weight(const cd& x) {
  if (std::abs(x) == 0.0) throw Error(ErrorCode::InvalidArgument, "edge weight is zero");
  return std::log(x);
}

// Integer m with zeta^m closest to z; throws unless z is within tol of it.
std::int64_t root_exponent(const cd& z, int n, double tol, const char* what) {
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  const auto m = static_cast<std::int64_t>(std::llround(turns * n));
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / n;
  if (std::abs(z - cd(std::cos(angle), std::sin(angle))) > tol) {
    throw Error(ErrorCode::CharacterMismatch,
                std::string(what) + " is not an N-th root of unity times its target");
  }
  return positive_mod(m, n);
}

}  // namespace

QuantumTorusRep build_irrep(const IdealTriangulation& t, const ClassifyingData& data,
                            const RootOfUnityParams& params) {
  return build_irrep(t, sigma_matrix(t), data, params);
}

QuantumTorusRep build_irrep(const IdealTriangulation& t, const SigmaMatrix& sigma,
                            const ClassifyingData& data, const RootOfUnityParams& params) {
  const int n = t.edge_count();
  const int r = t.punctures();
  const int big_n = params.order();
  if (sigma.size() != n) throw Error(ErrorCode::InvalidArgument, "sigma size differs from edge count");
  if (static_cast<int>(data.x.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "need one edge weight per edge");
  }
  if (static_cast<int>(data.n.size()) != r) {
    throw Error(ErrorCode::InvalidArgument, "need one puncture exponent per puncture");
  }
  const auto products = puncture_products(t, data.x);
  for (int j = 0; j < r; ++j) {
    if (std::abs(products[static_cast<std::size_t>(j)] - 1.0) > 1e-8) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge weights around puncture " + std::to_string(j + 1) + " do not multiply to 1");
    }
  }
  const int forced = forced_charge_sign(data.x);
  int sign = data.h_sign;
  if (sign == 0) sign = forced;
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "h_sign must be -1, 0 or 1");
  if (sign != forced) {
    throw Error(ErrorCode::CharacterMismatch,
                "h_sign " + std::to_string(sign) + " is impossible: h^N must equal the product of "
                "all edge weights, which has sign " + std::to_string(forced));
  }

  const SkewNormalForm snf = skew_normal_form(sigma.entries());
  for (std::int64_t d : snf.blocks) {
    if (std::gcd(d, static_cast<std::int64_t>(big_n)) != 1) {
      throw Error(ErrorCode::UnsupportedParameters,
                  "normal form block " + std::to_string(d) + " is not coprime to N");
    }
  }
  const int pairs = static_cast<int>(snf.blocks.size());
  const int first_kernel = 2 * pairs;
  int dim = 1;
  for (int k = 0; k < pairs; ++k) dim *= big_n;

  Eigen::VectorXcd ell(n);
  for (int i = 0; i < n; ++i) ell(i) = log_weight(data.x[static_cast<std::size_t>(i)]);
  Eigen::VectorXcd alpha = snf.transform.cast<cd>() * ell / static_cast<double>(big_n);

  // Fix the N-th roots of the central elements on the kernel coordinates.
  ClassifyingData resolved = data;
  resolved.h_sign = sign;
  const std::vector<cd> p_target = puncture_weights(resolved, params);
  const cd h_target = charge(resolved, params);
  const IntMatrix inv_t = snf.inverse_transform.transpose();
  const int kr = snf.kernel_rank;
  IntMatrix system(r + 1, kr);
  IntVector rhs(r + 1);
  for (int j = 0; j <= r; ++j) {
    const IntVector s = j < r ? star_exponents(t, j) : IntVector::Ones(n);
    const IntVector c = inv_t * s;
    if (pairs > 0 && c.head(first_kernel).any()) {
      throw Error(ErrorCode::CharacterMismatch, "central exponent has a non-kernel component");
    }
    system.row(j) = c.tail(kr).transpose();
    cd initial = std::exp(c.cast<cd>().dot(alpha));
    const cd target = j < r ? p_target[static_cast<std::size_t>(j)] : h_target;
    rhs(j) = root_exponent(target / initial, big_n, 1e-6, j < r ? "puncture weight" : "charge");
  }
  const auto shift = solve_mod(system, rhs, big_n);
  if (!shift) throw Error(ErrorCode::CharacterMismatch, "kernel adjustment system has no solution");
  for (int m = 0; m < kr; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((*shift)(m)) / big_n;
    alpha(first_kernel + m) += cd(0.0, angle);
  }

  std::vector<MatrixXcd> gens;
  std::vector<MatrixXcd> invs;
  for (int i = 0; i < n; ++i) {
    const IntVector c = snf.inverse_transform.row(i).transpose();
    const cd scale = std::exp(c.cast<cd>().dot(alpha));
    std::int64_t base = 0;
    for (int k = 0; k < pairs; ++k) base -= c(2 * k) * c(2 * k + 1) * snf.blocks[static_cast<std::size_t>(k)];
    MatrixXcd a = MatrixXcd::Zero(dim, dim);
    MatrixXcd ainv = MatrixXcd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
      int rest = col;
      int row = 0;
      int place = 1;
      std::int64_t exponent = base;
      for (int k = 0; k < pairs; ++k) {
        const int digit = rest % big_n;
        rest /= big_n;
        const std::int64_t moved = positive_mod(digit + c(2 * k + 1), big_n);
        exponent += 2 * snf.blocks[static_cast<std::size_t>(k)] * c(2 * k) * moved;
        row += static_cast<int>(moved) * place;
        place *= big_n;
      }
      const cd value = scale * params.q_pow(exponent);
      a(row, col) = value;
      ainv(col, row) = 1.0 / value;
    }
    gens.push_back(std::move(a));
    invs.push_back(std::move(ainv));
  }
  QuantumTorusRep rep(t, params, std::move(gens), std::move(invs));

  const CentralValues got = central_values(rep);
  CentralValues want{data.x, p_target, h_target, 0.0};
  if (central_distance(got, want) > 1e-8) {
    throw Error(ErrorCode::CharacterMismatch, "built representation misses its classifying data");
  }
  return rep;
}

Eigen::MatrixXcd matrix_power(const MatrixXcd& m, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix power");
  MatrixXcd result = MatrixXcd::Identity(m.rows(), m.cols());
  MatrixXcd base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Eigen::MatrixXcd eval_weyl_monomial(const QuantumTorusRep& rep, const IntVector& k,
                                    const std::vector<int>& order) {
  const int n = rep.triangulation().edge_count();
  if (k.size() != n || static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "exponent vector size differs from edge count");
  }
  std::int64_t exponent = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int a = order[static_cast<std::size_t>(u)];
      const int b = order[static_cast<std::size_t>(v)];
      exponent -= k(a) * k(b) * rep.sigma()(a, b);
    }
  }
  MatrixXcd result = MatrixXcd::Identity(rep.dimension(), rep.dimension());
  for (int label : order) {
    const std::int64_t e = k(label);
    if (e == 0) continue;
    const MatrixXcd& factor = e > 0 ? rep.generator(label) : rep.inverse(label);
    result = result * matrix_power(factor, static_cast<int>(std::llabs(e)));
  }
  return rep.params().q_pow(exponent) * result;
}

Eigen::MatrixXcd eval_weyl_monomial(const QuantumTorusRep& rep, const IntVector& k) {
  std::vector<int> order(static_cast<std::size_t>(rep.triangulation().edge_count()));
  std::iota(order.begin(), order.end(), 0);
  return eval_weyl_monomial(rep, k, order);
}

std::pair<cd, double> scalar_part(const MatrixXcd& m) {
  const cd s = m.trace() / static_cast<double>(m.rows());
  const double norm = m.norm();
  if (norm == 0.0) return {s, 0.0};
  const MatrixXcd rest = m - s * MatrixXcd::Identity(m.rows(), m.cols());
  return {s, rest.norm() / norm};
}

CentralValues central_values(const QuantumTorusRep& rep, double tolerance) {
  CentralValues out;
  const int n = rep.triangulation().edge_count();
  auto take = [&](const MatrixXcd& m, const std::string& what) {
    const auto [s, dev] = scalar_part(m);
    out.max_deviation = std::max(out.max_deviation, dev);
    if (dev > tolerance) {
      throw Error(ErrorCode::NotScalar, what + " deviates from a scalar by " + format_number(dev));
    }
    return s;
  };
  for (int i = 0; i < n; ++i) {
    out.x.push_back(take(matrix_power(rep.generator(i), rep.params().order()),
                         "A_" + std::to_string(i + 1) + "^N"));
  }
  for (int j = 0; j < rep.triangulation().punctures(); ++j) {
    out.p.push_back(take(eval_weyl_monomial(rep, star_exponents(rep.triangulation(), j)),
                         "P_" + std::to_string(j + 1)));
  }
  out.h = take(eval_weyl_monomial(rep, IntVector::Ones(n)), "H");
  return out;
}

ClassifyingData classify(const CentralValues& values, const RootOfUnityParams& params,
                         double tolerance) {
  ClassifyingData data;
  data.x = values.x;
  const int big_n = params.order();
  std::int64_t total = 0;
  for (const cd& p : values.p) {
    int best = -1;
    for (int k = 0; k < big_n; ++k) {
      if (std::abs(p - params.q_pow(2 * k)) <= tolerance) best = k;
    }
    if (best < 0) throw Error(ErrorCode::CharacterMismatch, "puncture weight is not a power of q^2");
    data.n.push_back(best);
    total += best;
  }
  const cd ratio = values.h / params.q_pow(total);
  if (std::abs(ratio - 1.0) <= tolerance) {
    data.h_sign = 1;
  } else if (std::abs(ratio + 1.0) <= tolerance) {
    data.h_sign = -1;
  } else {
    throw Error(ErrorCode::CharacterMismatch, "charge is not +-q^{sum n}");
  }
  return data;
}

namespace {

double residual_impl(const QuantumTorusRep& rep, bool relative) {
  double worst = 0.0;
  const int n = rep.triangulation().edge_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const MatrixXcd& a = rep.generator(i);
      const MatrixXcd& b = rep.generator(j);
      double res = (a * b - rep.params().q_pow(2 * rep.sigma()(i, j)) * b * a).norm();
      if (relative) res /= a.norm() * b.norm();
      worst = std::max(worst, res);
    }
  }
  return worst;
}

double rel_gap(const cd& a, const cd& b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

double relation_residual(const QuantumTorusRep& rep) { return residual_impl(rep, false); }

double relative_relation_residual(const QuantumTorusRep& rep) { return residual_impl(rep, true); }

double central_distance(const CentralValues& a, const CentralValues& b) {
  if (a.x.size() != b.x.size() || a.p.size() != b.p.size()) {
    throw Error(ErrorCode::InvalidArgument, "central values of different shapes");
  }
  double worst = rel_gap(a.h, b.h);
  for (std::size_t i = 0; i < a.x.size(); ++i) worst = std::max(worst, rel_gap(a.x[i], b.x[i]));
  for (std::size_t j = 0; j < a.p.size(); ++j) worst = std::max(worst, rel_gap(a.p[j], b.p[j]));
  return worst;
}

}  // namespace qtb
