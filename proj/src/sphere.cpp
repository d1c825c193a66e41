#include "qtbraid/sphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Geometry>

#include "qtbraid/error.hpp"

namespace qtb {

namespace {

constexpr double kCoincident = 1e-12;

// Rotation taking `pole` to the south pole.
Eigen::Matrix3d rotation_to_south(const Eigen::Vector3d& pole) {
  const Eigen::Vector3d z = -pole.normalized();
  Eigen::Vector3d helper = std::abs(z.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d x = (helper - helper.dot(z) * z).normalized();
  const Eigen::Vector3d y = z.cross(x);
  Eigen::Matrix3d rows;
  rows.row(0) = x.transpose();
  rows.row(1) = y.transpose();
  rows.row(2) = z.transpose();
  return rows;
}

}  // namespace

Eigen::Vector3d from_chart(const ExtendedComplex& w) {
  if (w.infinite) return {0.0, 0.0, -1.0};
  const double m = std::norm(w.value);
  return Eigen::Vector3d(2.0 * w.value.real(), 2.0 * w.value.imag(), 1.0 - m) / (1.0 + m);
}

ExtendedComplex to_chart(const Eigen::Vector3d& v) {
  const double denom = 1.0 + v.z();
  if (denom < 1e-15) return ExtendedComplex::infinity();
  return {{v.x() / denom, v.y() / denom}, false};
}

SpherePointConfig::SpherePointConfig(std::vector<Eigen::Vector3d> points)
    : points_(std::move(points)) {
  chart_.reserve(points_.size());
  for (const auto& p : points_) chart_.push_back(to_chart(p));
  if (points_.size() >= 2 && min_chordal_distance() < kCoincident) {
    throw Error(ErrorCode::DegenerateConfiguration, "two marked points coincide");
  }
}

SpherePointConfig SpherePointConfig::from_unit_vectors(std::vector<Eigen::Vector3d> points) {
  for (auto& p : points) {
    const double len = p.norm();
    if (!(len > 1e-300) || !std::isfinite(len)) {
      throw Error(ErrorCode::InvalidArgument, "point cannot be normalized");
    }
    p /= len;
  }
  return SpherePointConfig(std::move(points));
}

SpherePointConfig SpherePointConfig::from_chart(const std::vector<ExtendedComplex>& points) {
  std::vector<Eigen::Vector3d> v;
  v.reserve(points.size());
  for (const auto& w : points) v.push_back(qtb::from_chart(w));
  SpherePointConfig c(std::move(v));
  // Keep the caller's exact chart values.
  c.chart_ = points;
  return c;
}

double SpherePointConfig::min_chordal_distance() const { return min_pairwise_distance(points_); }

double min_pairwise_distance(std::span<const Eigen::Vector3d> points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      best = std::min(best, (points[a] - points[b]).norm());
    }
  }
  return best;
}

std::complex<double> cross_ratio(const Eigen::Vector3d& v_minus, const Eigen::Vector3d& v_plus,
                                 const Eigen::Vector3d& v_left, const Eigen::Vector3d& v_right) {
  const std::array<const Eigen::Vector3d*, 4> pts{&v_minus, &v_plus, &v_left, &v_right};
  // Cross-ratios are Moebius invariant, so any rotation may be used; pick the
  // axis direction farthest from the four points as the new pole.
  static const std::array<Eigen::Vector3d, 6> candidates{
      Eigen::Vector3d::UnitX(),  -Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(),
      -Eigen::Vector3d::UnitY(), Eigen::Vector3d::UnitZ(),  -Eigen::Vector3d::UnitZ()};
  std::size_t best = 5;
  double best_dist = -1.0;
  for (std::size_t c = candidates.size(); c-- > 0;) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto* p : pts) d = std::min(d, (*p - candidates[c]).norm());
    if (d > best_dist + 1e-12) {
      best_dist = d;
      best = c;
    }
  }
  std::array<std::complex<double>, 4> w;
  if (best == 5) {
    for (std::size_t i = 0; i < 4; ++i) w[i] = to_chart(*pts[i]).value;
  } else {
    const Eigen::Matrix3d rot = rotation_to_south(candidates[best]);
    for (std::size_t i = 0; i < 4; ++i) w[i] = to_chart(rot * *pts[i]).value;
  }
  const auto& [wm, wp, wl, wr] = w;
  return -((wp - wl) * (wm - wr)) / ((wp - wr) * (wm - wl));
}

std::complex<double> cross_ratio(const ExtendedComplex& v_minus, const ExtendedComplex& v_plus,
                                 const ExtendedComplex& v_left, const ExtendedComplex& v_right) {
  return cross_ratio(from_chart(v_minus), from_chart(v_plus), from_chart(v_left),
                     from_chart(v_right));
}

}  // namespace qtb
