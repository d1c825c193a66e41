#pragma once

// Shared fixtures for the unit tests: seeded random configurations and a few
// hand-built triangulations.

#include <random>
#include <vector>

#include <Eigen/Core>

#include "qtbraid/delaunay.hpp"
#include "qtbraid/error.hpp"
#include "qtbraid/sphere.hpp"
#include "qtbraid/triangulation.hpp"

namespace qtb::testing {

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  return v.normalized();
}

/// Random points with pairwise chordal distance at least `spacing`.
inline std::vector<Eigen::Vector3d> random_points(std::mt19937_64& rng, int r,
                                                  double spacing = 0.3) {
  return random_generic_points(rng, r, spacing);
}

inline std::vector<Eigen::Vector3d> regular_tetrahedron() {
  return {Eigen::Vector3d(1, 1, 1).normalized(), Eigen::Vector3d(1, -1, -1).normalized(),
          Eigen::Vector3d(-1, 1, -1).normalized(), Eigen::Vector3d(-1, -1, 1).normalized()};
}

inline IdealTriangulation tetrahedron() { return delaunay(regular_tetrahedron()); }

inline IdealTriangulation three_punctured() {
  return IdealTriangulation::from_vertex_faces(3, {{0, 1, 2}, {0, 2, 1}});
}

/// Label of the edge joining u and v (0-based punctures), or -1.
inline int edge_between(const IdealTriangulation& t, int u, int v) {
  for (int e = 0; e < t.edge_count(); ++e) {
    const auto& ends = t.edge(e);
    if ((ends.tail == u && ends.head == v) || (ends.tail == v && ends.head == u)) return e;
  }
  return -1;
}

}  // namespace qtb::testing
