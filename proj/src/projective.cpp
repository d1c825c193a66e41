#include "qtbraid/projective.hpp"

#include <cmath>

#include <Eigen/LU>

#include "qtbraid/error.hpp"

namespace qtb {

using Eigen::MatrixXcd;

ProjectiveMatrix::ProjectiveMatrix(MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::InvalidArgument, "projective matrix must be square");
  if (m_.size() == 0 || m_.norm() == 0.0) throw Error(ErrorCode::ZeroMatrix, "zero matrix");
  // Keep representatives at unit scale; the scalar carries no meaning.
  m_ /= m_.norm() / std::sqrt(static_cast<double>(m_.rows()));
}

ProjectiveMatrix ProjectiveMatrix::identity(int d) {
  return ProjectiveMatrix(MatrixXcd::Identity(d, d));
}

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& other) const {
  if (other.dimension() != dimension()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  return ProjectiveMatrix(m_ * other.m_);
}

ProjectiveMatrix ProjectiveMatrix::inverse() const {
  return ProjectiveMatrix(Eigen::PartialPivLU<MatrixXcd>(m_).inverse());
}

MatrixXcd ProjectiveMatrix::det_normalized() const {
  const std::complex<double> det = m_.determinant();
  if (std::abs(det) == 0.0) throw Error(ErrorCode::ZeroMatrix, "singular projective matrix");
  const std::complex<double> root = std::pow(det, 1.0 / static_cast<double>(dimension()));
  return m_ / root;
}

ProjectiveDistance projective_distance(const MatrixXcd& m1, const MatrixXcd& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
    throw Error(ErrorCode::InvalidArgument, "projective_distance dimension mismatch");
  }
  const double n1 = m1.squaredNorm();
  const double n2 = m2.squaredNorm();
  if (n1 == 0.0 || n2 == 0.0) throw Error(ErrorCode::ZeroMatrix, "projective_distance of a zero matrix");
  // <M2, M1> = tr(M2^* M1)
  const std::complex<double> inner = (m2.adjoint() * m1).trace();
  const std::complex<double> mu = inner / n2;
  // Direct residual; the closed form 1 - cos^2 cancels badly near 0.
  return {(m1 - mu * m2).norm() / std::sqrt(n1), mu};
}

ProjectiveDistance projective_distance(const ProjectiveMatrix& m1, const ProjectiveMatrix& m2) {
  return projective_distance(m1.matrix(), m2.matrix());
}

}  // namespace qtb
