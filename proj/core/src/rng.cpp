#include "sik/rng.hpp"

#include "sik/frame.hpp"

namespace sik {

Mat Rng::cgaussian(Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cgauss();
  return m;
}

Mat Rng::unitary(Eigen::Index k) {
  if (k == 0) return Mat(0, 0);
  Eigen::HouseholderQR<Mat> qr(cgaussian(k, k));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < k; ++j) {
    const cd d = r(j, j);
    q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : cd(1, 0);
  }
  return q;
}

Mat Rng::hermitian(Eigen::Index k, double scale) {
  const Mat g = cgaussian(k, k);
  return scale * 0.5 * (g + g.adjoint());
}

Mat random_lagrangian(const SymplecticSpace& sp, Rng& rng) {
  const Mat u = rng.unitary(sp.half_dim());
  return orthonormalize(sp.frame_of_generator(u), 1e-12);
}

Mat random_lagrangian(const SymplecticSpace& sp, std::uint64_t seed) {
  Rng rng(seed);
  return random_lagrangian(sp, rng);
}

Mat random_symplectic(const SymplecticSpace& sp, Rng& rng, double scale) {
  const Mat b = rng.hermitian(sp.dim(), scale);
  const Mat gen = -sp.J().partialPivLu().solve(b);
  return matrix_exp(gen);
}

Mat random_symplectic(const SymplecticSpace& sp, std::uint64_t seed, double scale) {
  Rng rng(seed);
  return random_symplectic(sp, rng, scale);
}

Mat random_subspace_of(const Mat& within, Eigen::Index k, Rng& rng, double rank_tol) {
  if (k == 0 || within.cols() == 0) return empty_frame(within.rows());
  return orthonormalize(within * rng.cgaussian(within.cols(), k), rank_tol);
}

}  // namespace sik
