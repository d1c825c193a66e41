#include "qtbraid/flip_pushforward.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/error.hpp"

namespace qtb {

using Eigen::MatrixXcd;

CentralValues predicted_flip_values(const CentralValues& values, const FlipRoleMap& roles) {
  CentralValues out = values;
  out.x = classical_flip_weights(values.x, roles);
  out.max_deviation = 0.0;
  return out;
}

QuantumTorusRep quantum_flip_pushforward(const QuantumTorusRep& rep, int diagonal,
                                         const PushforwardOptions& options,
                                         PushforwardReport* report) {
  const FlipResult res = flip(rep.triangulation(), diagonal);
  return quantum_flip_pushforward(rep, res.roles, options, report);
}

QuantumTorusRep quantum_flip_pushforward(const QuantumTorusRep& rep, const FlipRoleMap& roles,
                                         const PushforwardOptions& options,
                                         PushforwardReport* report) {
  const FlipResult res = flip(rep.triangulation(), roles.diagonal);
  if (!(res.roles == roles)) {
    throw Error(ErrorCode::InvalidArgument, "role map does not describe this triangulation's flip");
  }
  const int d = rep.dimension();
  const auto q = rep.params().q();
  const MatrixXcd id = MatrixXcd::Identity(d, d);
  const MatrixXcd& a1 = rep.generator(roles.diagonal);
  const MatrixXcd& a1_inv = rep.inverse(roles.diagonal);
  const MatrixXcd plus = id + q * a1;
  const MatrixXcd minus = id + q * a1_inv;
  const Eigen::PartialPivLU<MatrixXcd> lu_plus(plus);
  const Eigen::PartialPivLU<MatrixXcd> lu_minus(minus);
  const double rcond = std::min(lu_plus.rcond(), lu_minus.rcond());
  if (!(rcond > options.singular_rcond)) {
    throw Error(ErrorCode::SingularDiagonal,
                "Id + q A^{+-1} is singular on edge " + std::to_string(roles.diagonal + 1) +
                    " (rcond " + format_number(rcond) + ")");
  }
  const MatrixXcd plus_inv = lu_plus.inverse();

  std::vector<MatrixXcd> gens = rep.generators();
  std::vector<MatrixXcd> invs = rep.inverses();
  gens[roles.diagonal] = a1_inv;
  invs[roles.diagonal] = a1;
  for (int side : {roles.top, roles.bottom}) {
    gens[side] = plus * rep.generator(side);
    invs[side] = rep.inverse(side) * plus_inv;
  }
  for (int side : {roles.right, roles.left}) {
    gens[side] = lu_minus.solve(rep.generator(side));
    invs[side] = rep.inverse(side) * minus;
  }
  QuantumTorusRep out(res.triangulation, rep.params(), std::move(gens), std::move(invs));

  PushforwardReport local;
  local.rcond = rcond;
  if (options.verify) {
    local.relation_residual = relative_relation_residual(out);
    if (local.relation_residual > options.tolerance) {
      throw Error(ErrorCode::InternalCheckFailed,
                  "pushed matrices violate the relations: " + format_number(local.relation_residual));
    }
    const CentralValues predicted = predicted_flip_values(central_values(rep), roles);
    local.central_deviation = central_distance(central_values(out), predicted);
    if (local.central_deviation > options.tolerance) {
      throw Error(ErrorCode::InternalCheckFailed,
                  "pushed central values miss the prediction by " +
                      format_number(local.central_deviation));
    }
  }
  if (report != nullptr) *report = local;
  return out;
}

FlipPusher::FlipPusher(QuantumTorusRep rep0, FlipSequenceOptions options)
    : rep_(std::move(rep0)),
      options_(options),
      frame_(MatrixXcd::Identity(rep_.dimension(), rep_.dimension())),
      expected_(central_values(rep_)),
      min_gap_(std::numeric_limits<double>::infinity()) {}

void FlipPusher::push(int diagonal) {
  const FlipResult res = flip(rep_.triangulation(), diagonal);
  PushforwardOptions po = options_.pushforward;
  po.verify = false;
  rep_ = quantum_flip_pushforward(rep_, res.roles, po);
  expected_ = predicted_flip_values(expected_, res.roles);
  if (options_.pushforward.verify) {
    const double rel = relative_relation_residual(rep_);
    const double dev = central_distance(central_values(rep_), expected_);
    if (rel > options_.pushforward.tolerance || dev > options_.pushforward.tolerance) {
      throw Error(ErrorCode::InternalCheckFailed,
                  "pushforward check failed at flip " + std::to_string(flips_ + 1) +
                      ": relations " + format_number(rel) + ", central values " + format_number(dev));
    }
  }
  ++flips_;
  ++since_standard_;
  if (options_.restandardize_every > 0 && since_standard_ >= options_.restandardize_every) {
    restandardize();
  }
}

void FlipPusher::restandardize() {
  const ClassifyingData data = classify(central_values(rep_), rep_.params());
  ClassifyingData target = data;
  target.x = expected_.x;
  const QuantumTorusRep fresh = build_irrep(rep_.triangulation(), target, rep_.params());
  // rep_i L = L fresh_i, so rep = L fresh L^{-1}.
  const IntertwinerMatrix l = intertwiner(rep_, fresh, options_.intertwiner);
  min_gap_ = std::min(min_gap_, l.second_singular);
  max_null_ = std::max(max_null_, l.smallest_singular);
  frame_ = frame_ * l.matrix;
  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  frame_.cwiseAbs().maxCoeff(&bi, &bj);
  frame_ /= std::abs(frame_(bi, bj));
  rep_ = fresh;
  since_standard_ = 0;
}

QuantumTorusRep FlipPusher::current() const { return rep_.transported(frame_); }

QuantumTorusRep compose_flip_sequence(const QuantumTorusRep& rep0, const std::vector<int>& diagonals,
                                      const FlipSequenceOptions& options) {
  FlipPusher pusher(rep0, options);
  for (int e : diagonals) pusher.push(e);
  return pusher.current();
}

}  // namespace qtb
