#pragma once

// Property checks over batches of configurations.  Each returns the worst
// value seen against its threshold; failures raised by the library are
// reported in `detail` rather than thrown.

#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qtbraid/representation.hpp"

namespace qtb {

using PointSet = std::vector<Eigen::Vector3d>;

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
  /// Number of individual cases evaluated.
  int cases = 0;
  std::string detail;
};

/// Random puncture exponents in [0, N).
std::vector<int> random_exponents(std::mt19937_64& rng, int r, int big_n);

/// max ||A_i A_j - q^{2 sigma_ij} A_j A_i||_F over all built irreps.
CheckResult check_relations(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                            std::mt19937_64& rng, double tolerance = 1e-9);

/// Central values of the built irrep against the prescribed x, p, h, and
/// classify() recovering n and the charge sign.
CheckResult check_classification(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                                 std::mt19937_64& rng, double tolerance = 1e-8);

/// max |prod of edge weights around a puncture - 1|.
CheckResult check_puncture_products(const std::vector<PointSet>& configs, double tolerance = 1e-10);

/// Pushforward central values against the algebraic transform and against
/// the cross-ratios of the flipped triangulation, over `flips` random
/// embedded exchanges with distinct corners drawn by random walks from the
/// Delaunay triangulations of `configs`.  Fails if a diagonal weight comes
/// within 1e-12 of 0 or -1.
CheckResult check_flip_coherence(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                                 int flips, std::mt19937_64& rng, double tolerance = 1e-8);

/// Flip then flip back, relative Frobenius gap per generator.
CheckResult check_flip_involution(const std::vector<PointSet>& configs, int big_n, std::mt19937_64& rng,
                                  double tolerance = 1e-8);

/// Five alternating exchanges of two edges of one face return to the start
/// with the two labels swapped; the pushed generators equal the original
/// ones up to one common scalar.
CheckResult check_pentagon(const std::vector<PointSet>& configs, int big_n, std::mt19937_64& rng,
                           double tolerance = 1e-7);

/// Schur gap over a batch of intertwiner solves.
CheckResult check_schur(const SchurStats& stats, double null_tolerance = 1e-8,
                        double gap_tolerance = 1e-4);

CheckResult check_homomorphism(const HomomorphismReport& report, double tolerance = 1e-6);

/// R(w) under the automatic loop, a smaller circle and a bent connecting arc.
/// w must be pure.
IsotopyReport loop_variants_report(const BraidWord& w, const RepresentationContext& ctx,
                                   double tolerance = 1e-6);
CheckResult check_isotopy(const IsotopyReport& report, double tolerance = 1e-6);

/// Four punctures with the fourth crossing the plane of the other three:
/// one event with two exchanges, ending on the Delaunay triangulation.
CheckResult check_flattening();

/// D = 1 and R = Id at r = 3; R(empty) = Id for every configuration.
CheckResult check_trivial(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                          std::mt19937_64& rng, double tolerance = 1e-10);

std::vector<std::pair<BraidWord, BraidWord>> random_word_pairs(int strands, int count, int length,
                                                               std::mt19937_64& rng);

}  // namespace qtb
