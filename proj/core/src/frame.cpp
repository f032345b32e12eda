#include "sik/frame.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sik {

Mat orthonormalize(const Mat& m, double rank_tol) { return span_basis(m, rank_tol); }

bool is_orthonormal_frame(const Mat& f, double tol) {
  if (f.cols() == 0) return true;
  const Mat g = f.adjoint() * f;
  return (g - Mat::Identity(f.cols(), f.cols())).cwiseAbs().maxCoeff() <= tol;
}

Mat frame_sum(const Mat& f1, const Mat& f2, double rank_tol) {
  if (f1.rows() != f2.rows()) throw std::invalid_argument("frame_sum: ambient mismatch");
  Mat stacked(f1.rows(), f1.cols() + f2.cols());
  stacked << f1, f2;
  return span_basis(stacked, rank_tol);
}

Mat frame_intersect(const Mat& f1, const Mat& f2, double rank_tol) {
  if (f1.rows() != f2.rows()) throw std::invalid_argument("frame_intersect: ambient mismatch");
  if (f1.cols() == 0 || f2.cols() == 0) return empty_frame(f1.rows());
  Mat stacked(f1.rows(), f1.cols() + f2.cols());
  stacked << f1, f2;
  // Null vectors (u; w) of [F1 F2] give intersection vectors F1 u = -F2 w.
  const Mat null = right_nullspace(stacked, rank_tol);
  if (null.cols() == 0) return empty_frame(f1.rows());
  return span_basis(f1 * null.topRows(f1.cols()), rank_tol);
}

Mat annihilator(const SymplecticSpace& sp, const Mat& f, double rank_tol) {
  if (f.rows() != sp.dim()) throw std::invalid_argument("annihilator: ambient mismatch");
  if (f.cols() == 0) return Mat::Identity(sp.dim(), sp.dim());
  // omega(x, y) = y^H J x vanishes for all y in F iff F^H J x = 0.
  return right_nullspace(f.adjoint() * sp.J(), rank_tol);
}

bool is_isotropic(const SymplecticSpace& sp, const Mat& f, double gram_tol) {
  if (f.cols() == 0) return true;
  return sp.omega_gram(f, f).cwiseAbs().maxCoeff() <= gram_tol * std::max(1.0, sp.J().cwiseAbs().maxCoeff());
}

bool is_lagrangian(const SymplecticSpace& sp, const Mat& f, const Tolerances& tol) {
  return f.cols() == sp.half_dim() && is_isotropic(sp, f, tol.sympl_tol);
}

bool span_contains(const Mat& big, const Mat& small, double rank_tol) {
  if (small.cols() == 0) return true;
  if (big.cols() == 0) return false;
  // Residual of projecting small onto span(big).
  const Mat resid = small - big * (big.adjoint() * small);
  return resid.cwiseAbs().maxCoeff() <= rank_tol * 10.0;
}

bool same_span(const Mat& f1, const Mat& f2, double rank_tol) {
  return f1.cols() == f2.cols() && span_contains(f1, f2, rank_tol) &&
         span_contains(f2, f1, rank_tol);
}

double principal_angle_min(const Mat& f1, const Mat& f2) {
  if (f1.cols() == 0 || f2.cols() == 0) return kPi / 2;
  Eigen::JacobiSVD<Mat> svd(f1.adjoint() * f2);
  const double c = std::clamp(svd.singularValues()(0), 0.0, 1.0);
  return std::acos(c);
}

Mat near_intersection(const Mat& f1, const Mat& f2, double max_angle) {
  if (f1.cols() == 0 || f2.cols() == 0) return empty_frame(f1.rows());
  Eigen::JacobiSVD<Mat> svd(f1.adjoint() * f2, Eigen::ComputeFullU);
  const double cutoff = std::cos(max_angle);
  Eigen::Index k = 0;
  const auto& sv = svd.singularValues();
  while (k < sv.size() && sv(k) >= cutoff) ++k;
  return f1 * svd.matrixU().leftCols(k);
}

Mat product_frame(const Mat& top, const Mat& bottom) {
  Mat f = Mat::Zero(top.rows() + bottom.rows(), top.cols() + bottom.cols());
  f.topLeftCorner(top.rows(), top.cols()) = top;
  f.bottomRightCorner(bottom.rows(), bottom.cols()) = bottom;
  return f;
}

Mat graph_frame(const Mat& m) {
  Mat f(2 * m.rows(), m.cols());
  f.topRows(m.rows()) = Mat::Identity(m.rows(), m.cols());
  f.bottomRows(m.rows()) = m;
  // Columns of [I; M] are independent; orthonormalize for the frame contract.
  Eigen::HouseholderQR<Mat> qr(f);
  return Mat(qr.householderQ()).leftCols(m.cols());
}

Mat swap_factors(const Mat& f) {
  if (f.rows() % 2 != 0) throw std::invalid_argument("swap_factors: odd ambient");
  const Eigen::Index h = f.rows() / 2;
  Mat g(f.rows(), f.cols());
  g.topRows(h) = f.bottomRows(h);
  g.bottomRows(h) = f.topRows(h);
  return g;
}

Mat rotate_lagrangian(const SymplecticSpace& sp, const Mat& f, double s) {
  return sp.rotation(s) * f;
}

Mat IsotropicReduction::project(const Mat& sub_frame, double rank_tol) const {
  const Mat inside = frame_intersect(sub_frame, eps_omega, rank_tol);
  if (inside.cols() == 0) return empty_frame(section.cols());
  return span_basis(section.adjoint() * inside, rank_tol);
}

IsotropicReduction reduce_by_isotropic(const SymplecticSpace& sp, const Mat& eps,
                                       const Tolerances& tol) {
  if (!is_isotropic(sp, eps, tol.sympl_tol))
    throw std::invalid_argument("reduce_by_isotropic: eps is not isotropic");
  const Eigen::Index d = sp.dim();
  if (eps.cols() == 0) {
    return IsotropicReduction{sp, Mat::Identity(d, d), empty_frame(d),
                              Mat::Identity(d, d)};
  }
  const Mat eps_omega = annihilator(sp, eps, tol.rank_tol);
  // Orthogonal complement of eps inside eps^omega.
  const Mat coords = eps_omega.adjoint() * eps;             // eps in eps^omega coords
  const Mat perp = right_nullspace(coords.adjoint(), tol.rank_tol);
  const Mat section = eps_omega * perp;                     // orthonormal
  const Mat jq = section.adjoint() * sp.J() * section;
  return IsotropicReduction{SymplecticSpace(jq), section, eps, eps_omega};
}

}  // namespace sik
