#pragma once

// Paths of the punctures on the sphere.

#include <vector>

#include <Eigen/Core>

namespace qtb {

/// One polyline of waypoints per puncture, followed along great-circle arcs
/// at constant speed (time proportional to arc length, t in [0, 1]).  A
/// puncture with a single waypoint stays put.
class MotionPath {
 public:
  explicit MotionPath(std::vector<std::vector<Eigen::Vector3d>> waypoints);

  static MotionPath stationary(const std::vector<Eigen::Vector3d>& points);

  int punctures() const noexcept { return static_cast<int>(waypoints_.size()); }
  Eigen::Vector3d position(int i, double t) const;
  std::vector<Eigen::Vector3d> at(double t) const;
  std::vector<Eigen::Vector3d> start() const { return at(0.0); }
  std::vector<Eigen::Vector3d> end() const { return at(1.0); }
  const std::vector<Eigen::Vector3d>& waypoints(int i) const {
    return waypoints_.at(static_cast<std::size_t>(i));
  }

  /// Every puncture ends where it started.
  bool is_closed(double tolerance = 1e-12) const;
  MotionPath reversed() const;

  /// Minimum pairwise chordal distance over `samples` + 1 equally spaced times.
  double min_separation(int samples = 2000) const;

 private:
  std::vector<std::vector<Eigen::Vector3d>> waypoints_;
  std::vector<std::vector<double>> times_;
};

struct LoopOptions {
  /// Angular radius of the circle around the target; 0 picks 0.4 times the
  /// angle from the target to its nearest other puncture.
  double radius = 0.0;
  /// Angular offset of the midpoint of the connecting arc, sideways.
  double bulge = 0.0;
  int circle_segments = 96;
  /// Minimum chordal distance between the moving puncture and the others.
  double margin = 1e-2;
};

/// Puncture j travels along an arc toward k, circles k once counterclockwise
/// (seen from outside), and returns along the same arc.  The inverse runs the
/// loop backwards.  Throws NoSafePath when the loop comes within the margin
/// of another puncture, or when a bulged arc sweeps over one.
MotionPath pure_braid_motion(int j, int k, bool inverse, const std::vector<Eigen::Vector3d>& points,
                             const LoopOptions& options = {});

/// Punctures a and b trade places by a rotation through pi about their
/// midpoint, counterclockwise seen from outside (clockwise for the inverse).
/// Throws NoSafePath when another puncture lies in the swept disk.
MotionPath half_twist_motion(int a, int b, bool inverse, const std::vector<Eigen::Vector3d>& points,
                             const LoopOptions& options = {});

Eigen::Vector3d slerp(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double s);

/// Rotation of v about the unit axis by angle (right-hand rule).
Eigen::Vector3d rotate(const Eigen::Vector3d& v, const Eigen::Vector3d& axis, double angle);

double angle_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

}  // namespace qtb
