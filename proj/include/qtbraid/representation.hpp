#pragma once

// Projective matrices of pure braids: push the standard representation of
// the Delaunay triangulation through the exchanges met along the motion and
// solve for the intertwiner back to the start.

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qtbraid/braid_word.hpp"
#include "qtbraid/flip_pushforward.hpp"
#include "qtbraid/intertwiner.hpp"
#include "qtbraid/motion.hpp"
#include "qtbraid/projective.hpp"
#include "qtbraid/quantum_torus.hpp"
#include "qtbraid/tracking.hpp"

namespace qtb {

struct RepresentationContext {
  std::vector<Eigen::Vector3d> points;
  RootOfUnityParams params{3, 1};
  /// Puncture exponents, p_j = q^{2 n_j}; empty means all zero.
  std::vector<int> n;
  /// 0 picks the sign forced by the edge weights.
  int h_sign = 0;
  LoopOptions loop;
  TrackingOptions tracking;
  FlipSequenceOptions flips;
  IntertwinerOptions intertwiner;
  /// Largest accepted gap between start and end central values.
  double data_tolerance = 1e-8;
};

struct FlipLogEntry {
  int letter = 0;
  double t = 0.0;
  std::vector<int> flips;
  std::vector<int> punctures;
  /// Predicted central values after the event.
  CentralValues values;
};

struct BraidRepResult {
  ProjectiveMatrix matrix;
  IdealTriangulation triangulation;
  std::vector<FlipLogEntry> log;
  /// Solve of the final intertwiner.
  IntertwinerMatrix solve;
  /// Smallest gap seen by any intertwiner solve, re-standardizations included.
  double min_schur_gap = 0.0;
  double max_null_singular = 0.0;
  /// Largest relative gap between end and start edge weights (labels matched).
  double weight_mismatch = 0.0;
  /// Same for the full central data.
  double data_mismatch = 0.0;
  int flip_count = 0;
};

/// R(w).  Throws NotPure for impure words and whatever the constituent
/// steps raise (tracking failures, NoSafePath, NotIsomorphic, ...).
BraidRepResult braid_representation(const BraidWord& w, const RepresentationContext& ctx);

ProjectiveMatrix representation(const BraidWord& w, const RepresentationContext& ctx);

/// Standard representation of the Delaunay triangulation of ctx.points.
QuantumTorusRep base_representation(const RepresentationContext& ctx);

struct HomomorphismEntry {
  std::string w1;
  std::string w2;
  double distance = 0.0;
  std::complex<double> scalar;
  /// Failure raised while evaluating the pair; distance is then infinite.
  std::string error;
};

/// Extremes of the singular values met by the intertwiner solves.
struct SchurStats {
  double min_gap = std::numeric_limits<double>::infinity();
  double max_null = 0.0;
  int solves = 0;

  void add(const BraidRepResult& r);
  void merge(const SchurStats& other);
};

struct HomomorphismReport {
  std::vector<HomomorphismEntry> pairs;
  bool pass = true;
  double worst = 0.0;
  SchurStats schur;
};

/// Compares R(w1 w2) with R(w1) R(w2) for each pair.
HomomorphismReport verify_homomorphism(const std::vector<std::pair<BraidWord, BraidWord>>& pairs,
                                       const RepresentationContext& ctx, double tolerance = 1e-6);

struct IsotopyReport {
  std::vector<ProjectiveMatrix> matrices;
  /// distance between variant i and variant j, i < j, row-major.
  std::vector<double> distances;
  double worst = 0.0;
  bool pass = true;
  SchurStats schur;
  /// Number of different exchange sequences among the variants.
  int distinct_sequences = 0;
};

/// R(w) under several loop realizations.
IsotopyReport isotopy_invariance_check(const BraidWord& w, const RepresentationContext& ctx,
                                       const std::vector<LoopOptions>& variants,
                                       double tolerance = 1e-6);

struct TraceScanRow {
  int N = 0;
  int dimension = 0;
  double abs_trace = 0.0;
};

/// |tr| of the determinant-one representative of R(w) for each odd N.
/// Puncture exponents ctx.n are reduced mod N.
std::vector<TraceScanRow> trace_scan(const BraidWord& w, const RepresentationContext& ctx,
                                     const std::vector<int>& orders, int s = 1);

}  // namespace qtb
