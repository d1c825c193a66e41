#pragma once

#include <Eigen/Core>

#include "qtbraid/quantum_torus.hpp"

namespace qtb {

struct IntertwinerOptions {
  /// Largest accepted smallest singular value of the normalized system.
  double null_tolerance = 1e-7;
  /// Smallest accepted second singular value.
  double gap_tolerance = 1e-4;
};

/// L with A_i L = L B_i, largest-modulus entry scaled to 1.
struct IntertwinerMatrix {
  Eigen::MatrixXcd matrix;
  double smallest_singular = 0.0;
  double second_singular = 0.0;
  /// max_i ||A_i L - L B_i||_F / (||A_i||_F ||L||_F)
  double residual = 0.0;
};

/// Null vector of the stacked maps L -> A_i L - L B_i.  Throws NotIsomorphic
/// when no singular value is below the null tolerance and NotIrreducible
/// when the second one is too.
IntertwinerMatrix intertwiner(const QuantumTorusRep& a, const QuantumTorusRep& b,
                              const IntertwinerOptions& options = {});

}  // namespace qtb
