#include "qtbraid/intertwiner.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "qtbraid/error.hpp"

namespace qtb {

using Eigen::MatrixXcd;
using cd = std::complex<double>;

IntertwinerMatrix intertwiner(const QuantumTorusRep& a, const QuantumTorusRep& b,
                              const IntertwinerOptions& options) {
  const int d = a.dimension();
  const int n = a.triangulation().edge_count();
  if (b.dimension() != d || b.triangulation().edge_count() != n) {
    throw Error(ErrorCode::InvalidArgument, "intertwiner needs representations of equal shape");
  }
  const int dd = d * d;
  // vec(A L - L B) = (I (x) A - B^T (x) I) vec(L), one block per generator.
  MatrixXcd stacked = MatrixXcd::Zero(static_cast<Eigen::Index>(n) * dd, dd);
  for (int i = 0; i < n; ++i) {
    const double scale = std::sqrt(static_cast<double>(d)) /
                         std::max(a.generator(i).norm(), b.generator(i).norm());
    const MatrixXcd ai = scale * a.generator(i);
    const MatrixXcd bt = scale * b.generator(i).transpose();
    auto block = stacked.middleRows(static_cast<Eigen::Index>(i) * dd, dd);
    for (int col = 0; col < d; ++col) {
      for (int k = 0; k < d; ++k) {
        block.block(col * d, k * d, d, d) -= bt(col, k) * MatrixXcd::Identity(d, d);
      }
      block.block(col * d, col * d, d, d) += ai;
    }
  }
  const Eigen::HouseholderQR<MatrixXcd> qr(stacked);
  const MatrixXcd r = qr.matrixQR().topRows(dd).triangularView<Eigen::Upper>();
  const Eigen::BDCSVD<MatrixXcd> svd(r, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();

  IntertwinerMatrix out;
  out.smallest_singular = sv(dd - 1);
  out.second_singular = dd > 1 ? sv(dd - 2) : INFINITY;
  if (out.smallest_singular > options.null_tolerance) {
    throw Error(ErrorCode::NotIsomorphic,
                "no intertwiner: smallest singular value " + format_number(out.smallest_singular));
  }
  if (out.second_singular < options.gap_tolerance) {
    throw Error(ErrorCode::NotIrreducible, "intertwiner space has dimension >= 2: second singular value " +
                                               format_number(out.second_singular));
  }
  const Eigen::VectorXcd v = svd.matrixV().col(dd - 1);
  MatrixXcd l = v.reshaped(d, d);
  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  l.cwiseAbs().maxCoeff(&bi, &bj);
  l /= l(bi, bj);
  out.matrix = l;
  for (int i = 0; i < n; ++i) {
    const double res = (a.generator(i) * l - l * b.generator(i)).norm() /
                       (a.generator(i).norm() * l.norm());
    out.residual = std::max(out.residual, res);
  }
  return out;
}

}  // namespace qtb
