#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "qtbraid/sphere.hpp"
#include "qtbraid/triangulation.hpp"

namespace qtb {

/// Edge weight per label.
using CrossRatioWeights = std::vector<std::complex<double>>;

/// Corners of the square around edge e: v_minus -> v_plus is the stored
/// orientation, v_left / v_right the third vertices of the faces to its left
/// and right.
struct EdgeQuad {
  int v_minus = 0;
  int v_plus = 0;
  int v_left = 0;
  int v_right = 0;
};

EdgeQuad edge_quad(const IdealTriangulation& t, int e);

/// Cross-ratio weight of every edge.  Throws NotSimple, or
/// NumericalDegeneracy when two distinct corner punctures are closer than
/// `tolerance`.
CrossRatioWeights cross_ratio_weights(const IdealTriangulation& t,
                                      std::span<const Eigen::Vector3d> points,
                                      double tolerance = 1e-9);
CrossRatioWeights cross_ratio_weights(const IdealTriangulation& t, const SpherePointConfig& c,
                                      double tolerance = 1e-9);

/// Classical diagonal exchange of edge weights.  Throws SingularWeight when
/// the diagonal weight is 0 or -1 (within `tolerance`).
CrossRatioWeights classical_flip_weights(const CrossRatioWeights& x, const FlipRoleMap& roles,
                                         double tolerance = 1e-12);

/// Product of the weights around each puncture.
std::vector<std::complex<double>> puncture_products(const IdealTriangulation& t,
                                                    const CrossRatioWeights& x);

}  // namespace qtb
