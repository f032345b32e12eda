#include "sik/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace sik {

Eigen::Index svd_rank(const Mat& m, double rank_tol, double floor_scale) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(sv(0), floor_scale);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

Mat span_basis(const Mat& m, double rank_tol) {
  if (m.cols() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Mat qr_orthonormalize(const Mat& m) {
  if (m.cols() == 0) return m;
  Eigen::HouseholderQR<Mat> qr(m);
  return Mat(qr.householderQ()).leftCols(m.cols());
}

Mat right_nullspace(const Mat& m, double rank_tol, double floor_scale) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(sv.size() ? sv(0) : 0.0, floor_scale);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

Mat matrix_exp(const Mat& a) { return a.exp(); }

Mat matrix_log(const Mat& a) { return a.log(); }

Mat polar_unitary(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double wrap_angle(double phi) {
  double w = std::remainder(phi, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

double snap_to_int(double a, double int_tol) {
  const double r = std::round(a);
  return (std::abs(a - r) <= int_tol) ? r : a;
}

}  // namespace sik
