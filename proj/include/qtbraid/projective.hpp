#pragma once

#include <complex>

#include <Eigen/Core>

namespace qtb {

/// Nonzero square matrix up to a nonzero scalar.
class ProjectiveMatrix {
 public:
  /// Throws ZeroMatrix for the zero matrix and InvalidArgument when not square.
  explicit ProjectiveMatrix(Eigen::MatrixXcd m);

  static ProjectiveMatrix identity(int d);

  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  int dimension() const noexcept { return static_cast<int>(m_.rows()); }

  ProjectiveMatrix operator*(const ProjectiveMatrix& other) const;
  ProjectiveMatrix inverse() const;

  /// Representative with determinant 1 (principal D-th root).
  Eigen::MatrixXcd det_normalized() const;

 private:
  Eigen::MatrixXcd m_;
};

struct ProjectiveDistance {
  double distance = 0.0;
  /// mu minimizing ||M1 - mu M2||_F.
  std::complex<double> scalar;
};

/// min_mu ||M1 - mu M2||_F / ||M1||_F with mu = <M2, M1> / ||M2||^2.
/// Throws ZeroMatrix.
ProjectiveDistance projective_distance(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2);
ProjectiveDistance projective_distance(const ProjectiveMatrix& m1, const ProjectiveMatrix& m2);

}  // namespace qtb
