#pragma once

// Follows the Delaunay triangulation of moving punctures and records the
// diagonal exchanges it goes through.

#include <vector>

#include <Eigen/Core>

#include "qtbraid/motion.hpp"
#include "qtbraid/triangulation.hpp"

namespace qtb {

struct FlipEvent {
  double t = 0.0;
  /// Labels flipped at this moment, in order.  Two entries for a flattening
  /// of four punctures.
  std::vector<int> flips;
  /// Corners of the square: v_minus, v_plus, v_left, v_right of the first flip.
  std::vector<int> punctures;
  /// Role map of every flip, taken just before it.
  std::vector<FlipRoleMap> roles;
};

struct TrackingOptions {
  double step = 1e-3;
  double time_tolerance = 1e-10;
  /// Compare with a freshly computed hull after every event.
  bool verify = true;
};

struct TrackingResult {
  std::vector<FlipEvent> events;
  IdealTriangulation final_triangulation;
};

/// Sign test of edge e: orient3d(v_minus, v_plus, v_left, v_right), negative
/// while the edge is locally convex.
double edge_convexity(const IdealTriangulation& t, const std::vector<Eigen::Vector3d>& points, int e);

/// Every edge is locally convex and t has the vertex faces of the hull.
bool is_delaunay(const IdealTriangulation& t, const std::vector<Eigen::Vector3d>& points);

/// Follows t0 along the motion (closed or not).  t0 must be Delaunay for the
/// starting positions.  Throws SimultaneousEvents when two exchanges fall
/// within the time tolerance of each other, TrackingMismatch when the
/// tracked triangulation disagrees with the hull.
TrackingResult track_flips(const MotionPath& motion, const IdealTriangulation& t0,
                           const TrackingOptions& options = {});

/// Applies the events' flips to t.
IdealTriangulation apply_events(const IdealTriangulation& t, const std::vector<FlipEvent>& events);

}  // namespace qtb
