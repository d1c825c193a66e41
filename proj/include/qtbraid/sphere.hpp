#pragma once

// Marked points on the unit sphere and their stereographic chart.
//
// The chart projects from the south pole, w = (x + iy) / (1 + z), which
// preserves the orientation given by the outward normal; the south pole is
// the point at infinity.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace qtb {

struct ExtendedComplex {
  std::complex<double> value{0.0, 0.0};
  bool infinite = false;

  static ExtendedComplex infinity() { return {{0.0, 0.0}, true}; }
};

Eigen::Vector3d from_chart(const ExtendedComplex& w);
ExtendedComplex to_chart(const Eigen::Vector3d& v);

class SpherePointConfig {
 public:
  /// Normalizes the inputs; throws InvalidArgument on zero vectors and
  /// DegenerateConfiguration when two points coincide.
  static SpherePointConfig from_unit_vectors(std::vector<Eigen::Vector3d> points);
  static SpherePointConfig from_chart(const std::vector<ExtendedComplex>& points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  const Eigen::Vector3d& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
  const ExtendedComplex& chart(int i) const { return chart_.at(static_cast<std::size_t>(i)); }
  const std::vector<Eigen::Vector3d>& points() const noexcept { return points_; }

  double min_chordal_distance() const;

 private:
  explicit SpherePointConfig(std::vector<Eigen::Vector3d> points);

  std::vector<Eigen::Vector3d> points_;
  std::vector<ExtendedComplex> chart_;
};

double min_pairwise_distance(std::span<const Eigen::Vector3d> points);

/// x = -((v+ - vl)(v- - vr)) / ((v+ - vr)(v- - vl)), evaluated after a
/// rotation of the sphere that keeps all four points away from infinity.
std::complex<double> cross_ratio(const Eigen::Vector3d& v_minus, const Eigen::Vector3d& v_plus,
                                 const Eigen::Vector3d& v_left, const Eigen::Vector3d& v_right);

std::complex<double> cross_ratio(const ExtendedComplex& v_minus, const ExtendedComplex& v_plus,
                                 const ExtendedComplex& v_left, const ExtendedComplex& v_right);

}  // namespace qtb
