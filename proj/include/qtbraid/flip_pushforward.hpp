#pragma once

// Quantum diagonal exchanges acting on representations.

#include <vector>

#include <Eigen/Core>

#include "qtbraid/intertwiner.hpp"
#include "qtbraid/quantum_torus.hpp"

namespace qtb {

struct PushforwardOptions {
  /// Check relations and central values after every exchange.
  bool verify = true;
  double tolerance = 1e-8;
  /// Reciprocal condition number below which Id + q A^{+-1} counts as singular.
  double singular_rcond = 1e-12;
};

struct PushforwardReport {
  double relation_residual = 0.0;
  double central_deviation = 0.0;
  double rcond = 0.0;
};

/// Central values after the exchange described by roles: the diagonal
/// weight inverts, the sides pick up (1 + x_1) or (1 + 1/x_1)^{-1}, puncture
/// weights and charge are unchanged.
CentralValues predicted_flip_values(const CentralValues& values, const FlipRoleMap& roles);

/// A'_1 = A_1^{-1}, A'_top = (Id + q A_1) A_top, A'_right = (Id + q A_1^{-1})^{-1} A_right,
/// A'_bottom = (Id + q A_1) A_bottom, A'_left = (Id + q A_1^{-1})^{-1} A_left.
/// `roles` must be the role map of flipping roles.diagonal in
/// rep.triangulation().  Throws SingularDiagonal, and InternalCheckFailed
/// when verification is on and the result misses the predicted values.
QuantumTorusRep quantum_flip_pushforward(const QuantumTorusRep& rep, const FlipRoleMap& roles,
                                         const PushforwardOptions& options = {},
                                         PushforwardReport* report = nullptr);

/// Flips `diagonal` in rep.triangulation() and pushes rep through it.
QuantumTorusRep quantum_flip_pushforward(const QuantumTorusRep& rep, int diagonal,
                                         const PushforwardOptions& options = {},
                                         PushforwardReport* report = nullptr);

struct FlipSequenceOptions {
  /// Rebuild a standard representation every this many exchanges; 0 never.
  int restandardize_every = 8;
  PushforwardOptions pushforward;
  IntertwinerOptions intertwiner;
};

/// Pushes a representation through a sequence of exchanges.  The state is a
/// standard representative `rep` together with a frame G; the pushed
/// representation itself is G rep G^{-1}.
class FlipPusher {
 public:
  explicit FlipPusher(QuantumTorusRep rep0, FlipSequenceOptions options = {});

  void push(int diagonal);

  /// Rebuilds the standard representative now.
  void restandardize();

  const QuantumTorusRep& representative() const noexcept { return rep_; }
  const Eigen::MatrixXcd& frame() const noexcept { return frame_; }
  const IdealTriangulation& triangulation() const noexcept { return rep_.triangulation(); }
  const CentralValues& expected() const noexcept { return expected_; }
  int flips() const noexcept { return flips_; }
  /// Smallest second singular value met in the re-standardization solves.
  double min_schur_gap() const noexcept { return min_gap_; }
  double max_null_singular() const noexcept { return max_null_; }

  /// G rep G^{-1}.
  QuantumTorusRep current() const;

 private:
  QuantumTorusRep rep_;
  FlipSequenceOptions options_;
  Eigen::MatrixXcd frame_;
  CentralValues expected_;
  int flips_ = 0;
  int since_standard_ = 0;
  double min_gap_;
  double max_null_ = 0.0;
};

/// Left-to-right composition of exchanges of the given diagonals.
QuantumTorusRep compose_flip_sequence(const QuantumTorusRep& rep0, const std::vector<int>& diagonals,
                                      const FlipSequenceOptions& options = {});

}  // namespace qtb
