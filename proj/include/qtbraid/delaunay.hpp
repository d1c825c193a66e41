#pragma once

#include <array>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "qtbraid/sphere.hpp"
#include "qtbraid/triangulation.hpp"

namespace qtb {

/// det[b - a, c - a, d - a]; positive when d lies on the side of the plane
/// abc that (b - a) x (c - a) points to.
double orient3d(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                const Eigen::Vector3d& d);

/// Facets of the convex hull of points on the sphere, each counterclockwise
/// seen from outside.  Brute force over triples, O(r^4).  Throws
/// DegenerateConfiguration when four points are coplanar within `tolerance`
/// or when the hull is not a triangulated sphere.
std::vector<std::array<int, 3>> hull_facets(std::span<const Eigen::Vector3d> points,
                                            double tolerance);

/// Triangulation by the faces of the inscribed convex polyhedron.  For three
/// points this is the two-triangle decomposition.
IdealTriangulation delaunay(std::span<const Eigen::Vector3d> points, double tolerance = 1e-12);
IdealTriangulation delaunay(const SpherePointConfig& c, double tolerance = 1e-12);

/// Uniform random points with pairwise chordal distance at least `spacing`
/// and no four of them coplanar within 1e-6.
std::vector<Eigen::Vector3d> random_generic_points(std::mt19937_64& rng, int r, double spacing = 0.3);

}  // namespace qtb
