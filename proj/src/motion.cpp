#include "qtbraid/motion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Geometry>

#include "qtbraid/error.hpp"
#include "qtbraid/sphere.hpp"

namespace qtb {

using Eigen::Vector3d;

double angle_between(const Vector3d& a, const Vector3d& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

Vector3d slerp(const Vector3d& a, const Vector3d& b, double s) {
  const double omega = angle_between(a, b);
  if (omega < 1e-15) return a;
  const double so = std::sin(omega);
  return (std::sin((1.0 - s) * omega) / so * a + std::sin(s * omega) / so * b).normalized();
}

Vector3d rotate(const Vector3d& v, const Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()) * v;
}

MotionPath::MotionPath(std::vector<std::vector<Vector3d>> waypoints) : waypoints_(std::move(waypoints)) {
  for (auto& way : waypoints_) {
    if (way.empty()) throw Error(ErrorCode::InvalidArgument, "every puncture needs a waypoint");
    std::vector<double> times{0.0};
    for (std::size_t s = 1; s < way.size(); ++s) {
      const double a = angle_between(way[s - 1], way[s]);
      if (a > std::numbers::pi - 1e-6) {
        throw Error(ErrorCode::InvalidArgument, "consecutive waypoints are antipodal");
      }
      times.push_back(times.back() + a);
    }
    const double total = times.back();
    for (double& t : times) t = total > 0.0 ? t / total : 0.0;
    times_.push_back(std::move(times));
  }
}

MotionPath MotionPath::stationary(const std::vector<Vector3d>& points) {
  std::vector<std::vector<Vector3d>> way;
  for (const auto& p : points) way.push_back({p});
  return MotionPath(std::move(way));
}

Vector3d MotionPath::position(int i, double t) const {
  const auto& way = waypoints_.at(static_cast<std::size_t>(i));
  const auto& times = times_[static_cast<std::size_t>(i)];
  if (way.size() == 1 || times.back() == 0.0 || t <= 0.0) return way.front();
  if (t >= 1.0) return way.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const auto s = static_cast<std::size_t>(it - times.begin());
  const double t0 = times[s - 1];
  const double t1 = times[s];
  if (t1 <= t0) return way[s];
  return slerp(way[s - 1], way[s], (t - t0) / (t1 - t0));
}

std::vector<Vector3d> MotionPath::at(double t) const {
  std::vector<Vector3d> out;
  out.reserve(waypoints_.size());
  for (int i = 0; i < punctures(); ++i) out.push_back(position(i, t));
  return out;
}

bool MotionPath::is_closed(double tolerance) const {
  return std::all_of(waypoints_.begin(), waypoints_.end(), [&](const auto& way) {
    return (way.front() - way.back()).norm() <= tolerance;
  });
}

MotionPath MotionPath::reversed() const {
  auto way = waypoints_;
  for (auto& w : way) std::reverse(w.begin(), w.end());
  return MotionPath(std::move(way));
}

double MotionPath::min_separation(int samples) const {
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s <= samples; ++s) {
    const auto pts = at(static_cast<double>(s) / samples);
    best = std::min(best, min_pairwise_distance(pts));
  }
  return best;
}

namespace {

void check_indices(int a, int b, std::size_t r) {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= r || static_cast<std::size_t>(b) >= r) {
    throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  }
  if (a == b) throw Error(ErrorCode::InvalidArgument, "generator needs two distinct punctures");
}

// Inside the spherical triangle abc (counterclockwise or not).
bool in_spherical_triangle(const Vector3d& p, const Vector3d& a, const Vector3d& b, const Vector3d& c) {
  const double s1 = a.cross(b).dot(p);
  const double s2 = b.cross(c).dot(p);
  const double s3 = c.cross(a).dot(p);
  return (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
}

void check_clearance(const MotionPath& path, const std::vector<int>& movers, double margin) {
  const int samples = 4000;
  for (int s = 0; s <= samples; ++s) {
    const auto pts = path.at(static_cast<double>(s) / samples);
    for (int m : movers) {
      for (int i = 0; i < path.punctures(); ++i) {
        if (i == m) continue;
        const double d = (pts[static_cast<std::size_t>(m)] - pts[static_cast<std::size_t>(i)]).norm();
        if (d < margin) {
          throw Error(ErrorCode::NoSafePath, "puncture " + std::to_string(m + 1) + " passes within " +
                                                 format_number(d) + " of puncture " +
                                                 std::to_string(i + 1));
        }
      }
    }
  }
}

}  // namespace

MotionPath pure_braid_motion(int j, int k, bool inverse, const std::vector<Vector3d>& points,
                             const LoopOptions& options) {
  check_indices(j, k, points.size());
  const Vector3d vj = points[static_cast<std::size_t>(j)];
  const Vector3d vk = points[static_cast<std::size_t>(k)];
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(i) != k) nearest = std::min(nearest, angle_between(vk, points[i]));
  }
  const double radius = options.radius > 0.0 ? options.radius : 0.4 * nearest;
  const double to_j = angle_between(vk, vj);
  if (radius >= to_j || to_j > std::numbers::pi - 1e-3) {
    throw Error(ErrorCode::NoSafePath, "no loop radius separates the two punctures");
  }
  // Entry point of the circle on the arc from k to j.
  const Vector3d w = slerp(vk, vj, radius / to_j);

  std::vector<Vector3d> arc{vj};
  if (options.bulge != 0.0) {
    const Vector3d mid = slerp(vj, w, 0.5);
    const Vector3d side = vj.cross(w).normalized();
    const Vector3d bent = rotate(mid, mid.cross(side), options.bulge);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (static_cast<int>(i) == j || static_cast<int>(i) == k) continue;
      if (in_spherical_triangle(points[i], vj, bent, w)) {
        throw Error(ErrorCode::NoSafePath, "bulged arc sweeps over puncture " + std::to_string(i + 1));
      }
    }
    arc.push_back(bent);
  }
  arc.push_back(w);

  std::vector<Vector3d> loop = arc;
  const int segments = std::max(options.circle_segments, 8);
  for (int s = 1; s < segments; ++s) {
    loop.push_back(rotate(w, vk, 2.0 * std::numbers::pi * s / segments));
  }
  loop.push_back(w);
  for (auto it = arc.rbegin() + 1; it != arc.rend(); ++it) loop.push_back(*it);
  loop.back() = vj;

  std::vector<std::vector<Vector3d>> way;
  for (std::size_t i = 0; i < points.size(); ++i) {
    way.push_back(static_cast<int>(i) == j ? loop : std::vector<Vector3d>{points[i]});
  }
  MotionPath path(std::move(way));
  if (inverse) path = path.reversed();
  check_clearance(path, {j}, options.margin);
  return path;
}

MotionPath half_twist_motion(int a, int b, bool inverse, const std::vector<Vector3d>& points,
                             const LoopOptions& options) {
  check_indices(a, b, points.size());
  const Vector3d va = points[static_cast<std::size_t>(a)];
  const Vector3d vb = points[static_cast<std::size_t>(b)];
  const Vector3d sum = va + vb;
  if (sum.norm() < 1e-6) throw Error(ErrorCode::NoSafePath, "half twist of antipodal punctures");
  const Vector3d axis = sum.normalized();
  const double disk = angle_between(axis, va);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(i) == a || static_cast<int>(i) == b) continue;
    if (angle_between(axis, points[i]) < disk + options.margin) {
      throw Error(ErrorCode::NoSafePath, "puncture " + std::to_string(i + 1) +
                                             " lies inside the half-twist disk");
    }
  }
  const int segments = std::max(options.circle_segments / 2, 8);
  const double sign = inverse ? -1.0 : 1.0;
  std::vector<Vector3d> wa{va};
  std::vector<Vector3d> wb{vb};
  for (int s = 1; s < segments; ++s) {
    const double angle = sign * std::numbers::pi * s / segments;
    wa.push_back(rotate(va, axis, angle));
    wb.push_back(rotate(vb, axis, angle));
  }
  wa.push_back(vb);
  wb.push_back(va);
  std::vector<std::vector<Vector3d>> way;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(i) == a) {
      way.push_back(wa);
    } else if (static_cast<int>(i) == b) {
      way.push_back(wb);
    } else {
      way.push_back({points[i]});
    }
  }
  MotionPath path(std::move(way));
  check_clearance(path, {a, b}, options.margin);
  return path;
}

}  // namespace qtb
