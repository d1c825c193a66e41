#pragma once

// Finite-dimensional representations of the quantum torus attached to a
// triangulation: one invertible matrix per edge with
// A_i A_j = q^{2 sigma_ij} A_j A_i.

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/root_of_unity.hpp"
#include "qtbraid/triangulation.hpp"

namespace qtb {

/// Edge weights x, puncture weights p_j = q^{2 n_j} and the charge
/// h = h_sign * q^{sum n_j}.  h_sign = 0 selects the sign forced by the edge
/// weights (h^N equals the product of all x_i, so for odd N only one sign is
/// consistent).
struct ClassifyingData {
  CrossRatioWeights x;
  std::vector<int> n;
  int h_sign = 0;
};

/// Sign of the product of all edge weights, which must be +-1.
int forced_charge_sign(const CrossRatioWeights& x);

std::vector<std::complex<double>> puncture_weights(const ClassifyingData& data,
                                                   const RootOfUnityParams& params);
std::complex<double> charge(const ClassifyingData& data, const RootOfUnityParams& params);

class QuantumTorusRep {
 public:
  QuantumTorusRep(IdealTriangulation t, RootOfUnityParams params,
                  std::vector<Eigen::MatrixXcd> generators, std::vector<Eigen::MatrixXcd> inverses);

  int dimension() const noexcept { return dimension_; }
  const IdealTriangulation& triangulation() const noexcept { return triangulation_; }
  const SigmaMatrix& sigma() const noexcept { return sigma_; }
  const RootOfUnityParams& params() const noexcept { return params_; }

  const Eigen::MatrixXcd& generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
  const Eigen::MatrixXcd& inverse(int i) const { return inverses_.at(static_cast<std::size_t>(i)); }
  const std::vector<Eigen::MatrixXcd>& generators() const noexcept { return generators_; }
  const std::vector<Eigen::MatrixXcd>& inverses() const noexcept { return inverses_; }

  /// G^{-1} A_i G for every generator.
  QuantumTorusRep conjugated(const Eigen::MatrixXcd& g) const;

  /// G A_i G^{-1} for every generator.
  QuantumTorusRep transported(const Eigen::MatrixXcd& g) const;

 private:
  IdealTriangulation triangulation_;
  SigmaMatrix sigma_;
  RootOfUnityParams params_;
  int dimension_;
  std::vector<Eigen::MatrixXcd> generators_;
  std::vector<Eigen::MatrixXcd> inverses_;
};

/// Standard irreducible representation with the given classifying data.
/// Throws InvalidArgument when the data is inconsistent with t (wrong sizes,
/// star products of x different from 1), UnsupportedParameters when a
/// normal-form block is not coprime to N, and CharacterMismatch when the
/// requested charge sign is impossible or the construction fails its
/// self-check.
QuantumTorusRep build_irrep(const IdealTriangulation& t, const SigmaMatrix& sigma,
                            const ClassifyingData& data, const RootOfUnityParams& params);
QuantumTorusRep build_irrep(const IdealTriangulation& t, const ClassifyingData& data,
                            const RootOfUnityParams& params);

/// q^{-sum_{u<v} k_u k_v sigma_uv} A_1^{k_1} ... A_n^{k_n}.
Eigen::MatrixXcd eval_weyl_monomial(const QuantumTorusRep& rep, const IntVector& k);

/// Same monomial with the factors multiplied in the given label order.
Eigen::MatrixXcd eval_weyl_monomial(const QuantumTorusRep& rep, const IntVector& k,
                                    const std::vector<int>& order);

struct CentralValues {
  CrossRatioWeights x;
  std::vector<std::complex<double>> p;
  std::complex<double> h;
  /// Largest relative distance of any evaluated matrix from its scalar part.
  double max_deviation = 0.0;
};

/// Scalars of A_i^N, P_j and H.  Throws NotScalar when one of them is
/// farther than `tolerance` (relative Frobenius distance) from a scalar.
CentralValues central_values(const QuantumTorusRep& rep, double tolerance = 1e-8);

/// Recovers integer puncture exponents and the charge sign from central
/// values.  Throws CharacterMismatch when p_j is not a power of q^2 or h is
/// not +-q^{sum n}.
ClassifyingData classify(const CentralValues& values, const RootOfUnityParams& params,
                         double tolerance = 1e-6);

/// max over i < j of ||A_i A_j - q^{2 sigma_ij} A_j A_i||_F.
double relation_residual(const QuantumTorusRep& rep);

/// Same residual divided by ||A_i||_F ||A_j||_F.
double relative_relation_residual(const QuantumTorusRep& rep);

/// Largest relative gap between two sets of central values.
double central_distance(const CentralValues& a, const CentralValues& b);

/// M = s Id + E with s = tr(M) / D; returns s and ||E||_F / ||M||_F.
std::pair<std::complex<double>, double> scalar_part(const Eigen::MatrixXcd& m);

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int exponent);

}  // namespace qtb
