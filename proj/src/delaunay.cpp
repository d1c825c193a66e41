#include <Eigen/Geometry>

#include "qtbraid/delaunay.hpp"

#include <cmath>
#include <string>

#include "qtbraid/error.hpp"

namespace qtb {

double orient3d(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                const Eigen::Vector3d& d) {
  return (b - a).cross(c - a).dot(d - a);
}

std::vector<std::array<int, 3>> hull_facets(std::span<const Eigen::Vector3d> points,
                                            double tolerance) {
  const int r = static_cast<int>(points.size());
  std::vector<std::array<int, 3>> facets;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      for (int c = b + 1; c < r; ++c) {
        int above = 0;
        int below = 0;
        for (int d = 0; d < r; ++d) {
          if (d == a || d == b || d == c) continue;
          const double o = orient3d(points[static_cast<std::size_t>(a)],
                                    points[static_cast<std::size_t>(b)],
                                    points[static_cast<std::size_t>(c)],
                                    points[static_cast<std::size_t>(d)]);
          if (std::abs(o) <= tolerance) {
            throw Error(ErrorCode::DegenerateConfiguration,
                        "points " + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " +
                            std::to_string(c + 1) + ", " + std::to_string(d + 1) +
                            " are coplanar");
          }
          (o > 0 ? above : below) += 1;
        }
        if (above == 0) facets.push_back({a, b, c});
        if (below == 0) facets.push_back({a, c, b});
      }
    }
  }
  if (static_cast<int>(facets.size()) != 2 * r - 4) {
    throw Error(ErrorCode::DegenerateConfiguration, "convex hull is not a triangulated sphere");
  }
  return facets;
}

IdealTriangulation delaunay(std::span<const Eigen::Vector3d> points, double tolerance) {
  const int r = static_cast<int>(points.size());
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 points");
  if (r == 3) {
    const Eigen::Vector3d n = (points[1] - points[0]).cross(points[2] - points[0]);
    if (n.norm() <= tolerance) {
      throw Error(ErrorCode::DegenerateConfiguration, "three points on a great circle line");
    }
    return IdealTriangulation::from_vertex_faces(3, {{0, 1, 2}, {0, 2, 1}});
  }
  return IdealTriangulation::from_vertex_faces(r, hull_facets(points, tolerance));
}

IdealTriangulation delaunay(const SpherePointConfig& c, double tolerance) {
  return delaunay(std::span<const Eigen::Vector3d>(c.points()), tolerance);
}

std::vector<Eigen::Vector3d> random_generic_points(std::mt19937_64& rng, int r, double spacing) {
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "need at least three points");
  std::normal_distribution<double> g(0.0, 1.0);
  while (true) {
    std::vector<Eigen::Vector3d> pts;
    for (int i = 0; i < r; ++i) pts.push_back(Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized());
    if (min_pairwise_distance(pts) < spacing) continue;
    try {
      hull_facets(pts, 1e-6);
    } catch (const Error&) {
      continue;
    }
    return pts;
  }
}

}  // namespace qtb
