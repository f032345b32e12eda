#include "sik/space.hpp"

#include <cmath>
#include <stdexcept>

namespace sik {

SymplecticSpace::SymplecticSpace(Mat j, double tol) : j_(std::move(j)) {
  const Eigen::Index d = j_.rows();
  if (j_.cols() != d || d % 2 != 0)
    throw std::invalid_argument("J must be square with even dimension");
  if (d == 0) {
    vminus_ = vplus_ = split_inv_ = ij_vecs_ = Mat(0, 0);
    ij_vals_ = Eigen::VectorXd(0);
    return;
  }

  const Mat ij = cd(0, 1) * j_;
  if ((ij - ij.adjoint()).cwiseAbs().maxCoeff() > tol * std::max(1.0, j_.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("iJ is not self-adjoint");

  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(ij));
  ij_vals_ = es.eigenvalues();
  ij_vecs_ = es.eigenvectors();

  const double scale = ij_vals_.cwiseAbs().maxCoeff();
  Eigen::Index npos = 0, nneg = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    if (std::abs(ij_vals_(k)) <= tol * scale)
      throw std::invalid_argument("J is not invertible");
    (ij_vals_(k) > 0 ? npos : nneg)++;
  }
  if (npos != nneg)
    throw std::invalid_argument("iJ must have zero signature");

  const Eigen::Index n = d / 2;
  vminus_.resize(d, n);
  vplus_.resize(d, n);
  Eigen::Index im = 0, ip = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lam = ij_vals_(k);
    const Vec col = ij_vecs_.col(k) / std::sqrt(std::abs(lam));
    if (lam > 0)
      vminus_.col(im++) = col;
    else
      vplus_.col(ip++) = col;
  }
  Mat split(d, d);
  split << vminus_, vplus_;
  split_inv_ = split.partialPivLu().inverse();
}

SymplecticSpace SymplecticSpace::standard(int half_dim) {
  if (half_dim < 0) throw std::invalid_argument("half_dim must be >= 0");
  const int n = half_dim;
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return SymplecticSpace(std::move(j));
}

cd SymplecticSpace::omega(const Vec& x, const Vec& y) const {
  return (y.adjoint() * (j_ * x))(0);
}

Mat SymplecticSpace::omega_gram(const Mat& x, const Mat& y) const {
  // G(i,j) = omega(x_i, y_j) = (Y^H J X)_(j,i); plain transpose, no conjugate.
  return (y.adjoint() * j_ * x).transpose();
}

SymplecticSpace SymplecticSpace::doubled() const {
  const Eigen::Index d = dim();
  Mat jj = Mat::Zero(2 * d, 2 * d);
  jj.topLeftCorner(d, d) = -j_;
  jj.bottomRightCorner(d, d) = j_;
  return SymplecticSpace(std::move(jj));
}

SymplecticSpace SymplecticSpace::negated() const { return SymplecticSpace(Mat(-j_)); }

Mat SymplecticSpace::generator_of(const Mat& lagrangian_frame) const {
  const Eigen::Index n = half_dim();
  if (lagrangian_frame.rows() != dim() || lagrangian_frame.cols() != n)
    throw std::invalid_argument("generator_of: frame must be 2n x n");
  // Balance the frame first: raw graph frames [I; M] of hyperbolically
  // growing maps are too ill-scaled for the block solve.
  const Mat c = split_inv_ * qr_orthonormalize(lagrangian_frame);
  const Mat a = c.topRows(n);
  const Mat b = c.bottomRows(n);
  // U = B A^{-1}, solved as A^T U^T = B^T.
  Eigen::ColPivHouseholderQR<Mat> qr(a.transpose());
  qr.setThreshold(1e-10);
  if (qr.rank() < n)
    throw std::runtime_error("generator_of: V^- component singular (frame not Lagrangian?)");
  return qr.solve(b.transpose()).transpose();
}

Mat SymplecticSpace::frame_of_generator(const Mat& u) const {
  return vminus_ + vplus_ * u;
}

Mat SymplecticSpace::rotation(double s) const {
  // e^{Js} with J = S(-iD)S^H: rotate each iJ eigenvector by e^{-i d s}.
  Vec ph(dim());
  for (Eigen::Index k = 0; k < dim(); ++k)
    ph(k) = std::exp(cd(0, -ij_vals_(k) * s));
  return ij_vecs_ * ph.asDiagonal() * ij_vecs_.adjoint();
}

Mat SymplecticSpace::j_one() const {
  Vec ph(dim());
  for (Eigen::Index k = 0; k < dim(); ++k)
    ph(k) = cd(0, -(ij_vals_(k) > 0 ? 1.0 : -1.0));
  return ij_vecs_ * ph.asDiagonal() * ij_vecs_.adjoint();
}

Mat SymplecticSpace::j_sqrt() const {
  return ij_vecs_ * ij_vals_.cwiseAbs().asDiagonal() * ij_vecs_.adjoint();
}

bool is_symplectic_map(const SymplecticSpace& src, const SymplecticSpace& dst,
                       const Mat& l, double tol) {
  if (l.rows() != dst.dim() || l.cols() != src.dim()) return false;
  const Mat resid = l.adjoint() * dst.J() * l - src.J();
  const double scale = std::max(1.0, src.J().cwiseAbs().maxCoeff());
  return resid.cwiseAbs().maxCoeff() <= tol * scale;
}

}  // namespace sik
