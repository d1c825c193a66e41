#include "qtbraid/tracking.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

#include <Eigen/Geometry>

#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/delaunay.hpp"
#include "qtbraid/error.hpp"

namespace qtb {

using Eigen::Vector3d;

double edge_convexity(const IdealTriangulation& t, const std::vector<Vector3d>& points, int e) {
  const EdgeQuad q = edge_quad(t, e);
  auto p = [&](int i) -> const Vector3d& { return points[static_cast<std::size_t>(i)]; };
  return orient3d(p(q.v_minus), p(q.v_plus), p(q.v_left), p(q.v_right));
}

namespace {

using FaceSet = std::set<std::array<int, 3>>;

std::array<int, 3> canonical(std::array<int, 3> f) {
  std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  return f;
}

FaceSet vertex_faces(const IdealTriangulation& t) {
  FaceSet out;
  for (int f = 0; f < t.face_count(); ++f) out.insert(canonical(t.face_vertices(f)));
  return out;
}

bool matches_hull(const IdealTriangulation& t, const std::vector<Vector3d>& points) {
  if (!is_simple(t)) return false;
  std::vector<std::array<int, 3>> facets;
  try {
    facets = hull_facets(points, 0.0);
  } catch (const Error&) {
    return false;
  }
  FaceSet hull;
  for (const auto& f : facets) hull.insert(canonical(f));
  return hull == vertex_faces(t);
}

std::vector<int> violated(const IdealTriangulation& t, const std::vector<Vector3d>& points) {
  std::vector<int> out;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (edge_convexity(t, points, e) >= 0.0) out.push_back(e);
  }
  return out;
}

bool segments_cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                    const Eigen::Vector2d& d) {
  auto cross2 = [](const Eigen::Vector2d& u, const Eigen::Vector2d& v) { return u.x() * v.y() - u.y() * v.x(); };
  const double s1 = cross2(b - a, c - a);
  const double s2 = cross2(b - a, d - a);
  const double s3 = cross2(d - c, a - c);
  const double s4 = cross2(d - c, b - c);
  return s1 * s2 < 0.0 && s3 * s4 < 0.0;
}

// For four nearly coplanar points, the two opposite edges of t that cross in
// the plane.
std::array<int, 2> crossing_diagonals(const IdealTriangulation& t, const std::vector<Vector3d>& points) {
  const Vector3d& a = points[0];
  Vector3d normal = Vector3d::Zero();
  for (int i = 1; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Vector3d n = (points[static_cast<std::size_t>(i)] - a).cross(points[static_cast<std::size_t>(j)] - a);
      if (n.norm() > normal.norm()) normal = n;
    }
  }
  const Vector3d u = normal.unitOrthogonal();
  const Vector3d v = normal.normalized().cross(u);
  auto flat = [&](int i) {
    const Vector3d d = points[static_cast<std::size_t>(i)] - a;
    return Eigen::Vector2d(d.dot(u), d.dot(v));
  };
  for (int e = 0; e < t.edge_count(); ++e) {
    for (int f = e + 1; f < t.edge_count(); ++f) {
      const auto& x = t.edge(e);
      const auto& y = t.edge(f);
      std::set<int> ends{x.tail, x.head, y.tail, y.head};
      if (ends.size() != 4) continue;
      if (segments_cross(flat(x.tail), flat(x.head), flat(y.tail), flat(y.head))) return {e, f};
    }
  }
  throw Error(ErrorCode::TrackingMismatch, "flattened punctures have no crossing diagonals");
}

struct Applied {
  IdealTriangulation t;
  FlipEvent event;
};

Applied flip_all(const IdealTriangulation& t, const std::vector<int>& labels, double time) {
  Applied out{t, FlipEvent{}};
  out.event.t = time;
  for (int e : labels) {
    if (!is_flip_embedded(out.t, e)) {
      throw Error(ErrorCode::TrackingMismatch, "edge " + std::to_string(e + 1) + " is not flippable");
    }
    FlipResult res = flip(out.t, e);
    out.event.flips.push_back(e);
    out.event.roles.push_back(res.roles);
    out.t = std::move(res.triangulation);
  }
  const auto& ro = out.event.roles.front();
  out.event.punctures = {ro.v_minus, ro.v_plus, ro.v_left, ro.v_right};
  return out;
}

}  // namespace

bool is_delaunay(const IdealTriangulation& t, const std::vector<Vector3d>& points) {
  if (!is_simple(t)) return false;
  if (t.punctures() == 3) return true;
  return violated(t, points).empty() && matches_hull(t, points);
}

TrackingResult track_flips(const MotionPath& motion, const IdealTriangulation& t0,
                           const TrackingOptions& options) {
  if (motion.punctures() != t0.punctures()) {
    throw Error(ErrorCode::InvalidArgument, "motion and triangulation have different puncture counts");
  }
  if (!(options.step > 0.0) || !(options.time_tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tracking step and time tolerance must be positive");
  }
  TrackingResult out{{}, t0};
  if (t0.punctures() == 3) return out;
  if (!is_delaunay(t0, motion.start())) {
    throw Error(ErrorCode::TrackingMismatch, "starting triangulation is not Delaunay");
  }
  IdealTriangulation& cur = out.final_triangulation;
  const double dt = options.time_tolerance;
  double lo = 0.0;
  while (lo < 1.0) {
    const double next = std::min(1.0, lo + options.step);
    if (violated(cur, motion.at(next)).empty()) {
      lo = next;
      continue;
    }
    double a = lo;
    double b = next;
    while (b - a > dt) {
      const double mid = 0.5 * (a + b);
      if (violated(cur, motion.at(mid)).empty()) {
        a = mid;
      } else {
        b = mid;
      }
    }
    const auto pts = motion.at(b);
    const auto bad = violated(cur, pts);
    if (!out.events.empty() && b - out.events.back().t < 2.0 * dt) {
      throw Error(ErrorCode::SimultaneousEvents, "two exchanges within the time tolerance");
    }
    Applied applied{cur, {}};
    if (cur.punctures() == 4) {
      // All four points pass through a plane: exchange both crossing
      // diagonals, the one through the lowest puncture first.
      auto pair = crossing_diagonals(cur, pts);
      if (std::min(cur.edge(pair[1]).tail, cur.edge(pair[1]).head) <
          std::min(cur.edge(pair[0]).tail, cur.edge(pair[0]).head)) {
        std::swap(pair[0], pair[1]);
      }
      applied = flip_all(cur, {pair[0], pair[1]}, b);
      if (!matches_hull(applied.t, pts)) {
        applied = flip_all(cur, {pair[1], pair[0]}, b);
      }
    } else {
      if (bad.size() != 1) {
        throw Error(ErrorCode::SimultaneousEvents,
                    std::to_string(bad.size()) + " edges lose convexity at t = " + format_number(b));
      }
      applied = flip_all(cur, bad, b);
    }
    if (!violated(applied.t, pts).empty()) {
      throw Error(ErrorCode::SimultaneousEvents, "another exchange follows within the time tolerance");
    }
    if (options.verify && !matches_hull(applied.t, pts)) {
      throw Error(ErrorCode::TrackingMismatch,
                  "tracked triangulation differs from the hull at t = " + format_number(b));
    }
    cur = std::move(applied.t);
    out.events.push_back(std::move(applied.event));
    lo = b;
  }
  if (!is_delaunay(cur, motion.end())) {
    throw Error(ErrorCode::TrackingMismatch, "final triangulation is not Delaunay");
  }
  return out;
}

IdealTriangulation apply_events(const IdealTriangulation& t, const std::vector<FlipEvent>& events) {
  IdealTriangulation cur = t;
  for (const auto& ev : events) {
    for (int e : ev.flips) cur = flip(cur, e).triangulation;
  }
  return cur;
}

}  // namespace qtb
