#include "qtbraid/cross_ratio.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qtbraid/error.hpp"

namespace qtb {

EdgeQuad edge_quad(const IdealTriangulation& t, int e) {
  const auto& refs = t.sides_of(e);
  auto third = [&](const SideRef& ref) {
    const Side& next = t.face(ref.face)[static_cast<std::size_t>((ref.slot + 1) % 3)];
    return t.side_head(next);
  };
  return EdgeQuad{t.edge(e).tail, t.edge(e).head, third(refs[0]), third(refs[1])};
}

CrossRatioWeights cross_ratio_weights(const IdealTriangulation& t,
                                      std::span<const Eigen::Vector3d> points, double tolerance) {
  if (!is_simple(t)) throw Error(ErrorCode::NotSimple, "triangulation has a loop edge");
  if (static_cast<int>(points.size()) != t.punctures()) {
    throw Error(ErrorCode::InvalidArgument, "point count does not match punctures");
  }
  CrossRatioWeights x(static_cast<std::size_t>(t.edge_count()));
  for (int e = 0; e < t.edge_count(); ++e) {
    const EdgeQuad q = edge_quad(t, e);
    const std::array<int, 4> ids{q.v_minus, q.v_plus, q.v_left, q.v_right};
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        if (ids[a] == ids[b]) continue;
        const double d = (points[static_cast<std::size_t>(ids[a])] -
                          points[static_cast<std::size_t>(ids[b])])
                             .norm();
        if (d < tolerance) {
          throw Error(ErrorCode::NumericalDegeneracy,
                      "corner points of edge " + std::to_string(e + 1) + " nearly coincide");
        }
      }
    }
    auto p = [&](int i) -> const Eigen::Vector3d& { return points[static_cast<std::size_t>(i)]; };
    x[static_cast<std::size_t>(e)] = cross_ratio(p(q.v_minus), p(q.v_plus), p(q.v_left), p(q.v_right));
  }
  return x;
}

CrossRatioWeights cross_ratio_weights(const IdealTriangulation& t, const SpherePointConfig& c,
                                      double tolerance) {
  return cross_ratio_weights(t, std::span<const Eigen::Vector3d>(c.points()), tolerance);
}

CrossRatioWeights classical_flip_weights(const CrossRatioWeights& x, const FlipRoleMap& roles,
                                         double tolerance) {
  const std::complex<double> x1 = x.at(static_cast<std::size_t>(roles.diagonal));
  if (std::abs(x1) <= tolerance || std::abs(x1 + 1.0) <= tolerance) {
    throw Error(ErrorCode::SingularWeight, "diagonal weight is 0 or -1");
  }
  CrossRatioWeights out = x;
  const auto grow = 1.0 + x1;
  const auto shrink = 1.0 / (1.0 + 1.0 / x1);
  auto at = [&](int label) -> std::complex<double>& { return out[static_cast<std::size_t>(label)]; };
  at(roles.diagonal) = 1.0 / x1;
  at(roles.top) *= grow;
  at(roles.right) *= shrink;
  at(roles.bottom) *= grow;
  at(roles.left) *= shrink;
  return out;
}

std::vector<std::complex<double>> puncture_products(const IdealTriangulation& t,
                                                    const CrossRatioWeights& x) {
  std::vector<std::complex<double>> out;
  for (int j = 0; j < t.punctures(); ++j) {
    std::complex<double> prod = 1.0;
    for (int e : puncture_star(t, j)) prod *= x.at(static_cast<std::size_t>(e));
    out.push_back(prod);
  }
  return out;
}

}  // namespace qtb
