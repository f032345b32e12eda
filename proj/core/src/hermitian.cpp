#include "sik/hermitian.hpp"

#include <cmath>
#include <stdexcept>

namespace sik {

InertiaTriple inertia_of(const Mat& h, double inertia_tol) {
  InertiaTriple out;
  if (h.rows() == 0) return out;
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() >
      1e-6 * std::max(1.0, h.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("inertia_of: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  const double cutoff = inertia_tol * (scale <= inertia_tol ? 1.0 : scale);
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > cutoff) out.plus++;
    else if (ev(k) < -cutoff) out.minus++;
    else out.zero++;
  }
  return out;
}

InertiaTriple inertia_of(const HermitianForm& f, const Tolerances& tol) {
  return inertia_of(f.matrix, tol.inertia_tol);
}

Mat form_kernel(const HermitianForm& f, const Tolerances& tol) {
  if (f.dim() == 0) return empty_frame(f.basis.rows());
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(f.matrix));
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  const double cutoff = tol.inertia_tol * (scale <= tol.inertia_tol ? 1.0 : scale);
  std::vector<Eigen::Index> null;
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    if (std::abs(ev(k)) <= cutoff) null.push_back(k);
  Mat coeffs(f.dim(), static_cast<Eigen::Index>(null.size()));
  for (std::size_t j = 0; j < null.size(); ++j)
    // The form is conjugate-linear in its second slot, so kernel coefficient
    // vectors are conjugates of null eigenvectors of the matrix.
    coeffs.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(null[j]).conjugate();
  return f.basis * coeffs;
}

Mat q_form_matrix_on(const SymplecticSpace& sp, const Mat& beta, const Mat& gamma,
                     const Mat& domain, const Tolerances& tol) {
  const Eigen::Index k = domain.cols();
  if (k == 0) return Mat(0, 0);
  // Decompose x_i = -y_i + z_i, y in beta, z in gamma: minimum-norm solve of
  // [-B C] [u; v] = x.
  Mat bc(sp.dim(), beta.cols() + gamma.cols());
  bc << -beta, gamma;
  Eigen::JacobiSVD<Mat> svd(bc, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Mat y(sp.dim(), k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Vec uv = svd.solve(domain.col(i));
    const Vec resid = bc * uv - domain.col(i);
    if (resid.norm() > 1e-8 * std::max(1.0, domain.col(i).norm()))
      throw std::invalid_argument(
          "q_form: domain vector is not in beta + gamma (decomposition residual)");
    y.col(i) = beta * uv.head(beta.cols());
  }
  Mat m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      m(i, j) = sp.omega(domain.col(i), y.col(j));
  const double drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (drift > 1e-6 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw std::runtime_error("q_form: result is not Hermitian (bad inputs?)");
  (void)tol;
  return hermitian_part(m);
}

HermitianForm q_form(const SymplecticSpace& sp, const Mat& alpha, const Mat& beta,
                     const Mat& gamma, const Tolerances& tol) {
  if (!is_isotropic(sp, alpha, tol.sympl_tol) || !is_isotropic(sp, beta, tol.sympl_tol) ||
      !is_isotropic(sp, gamma, tol.sympl_tol))
    throw std::invalid_argument("q_form: inputs must be isotropic");
  const Mat domain = frame_intersect(alpha, frame_sum(beta, gamma, tol.rank_tol), tol.rank_tol);
  return HermitianForm{domain, q_form_matrix_on(sp, beta, gamma, domain, tol)};
}

namespace {

// d/ds omega(x_i, P_{lambda(s)} x_j) at s = t. The projector onto the moving
// span removes all frame gauge freedom; any differentiable selection inside
// lambda(s) yields the same form.
Mat derivative_matrix(const SymplecticSpace& sp, const LagrangianPath& lambda, double t,
                      const Mat& domain, double step) {
  const Eigen::Index k = domain.cols();
  if (k == 0) return Mat(0, 0);
  auto gram_at = [&](double s) -> Mat {
    const Mat f = qr_orthonormalize(lambda.frame(s));
    const Mat proj = f * (f.adjoint() * domain);  // columns P_{lambda(s)} x_j
    return sp.omega_gram(domain, proj);           // G(i,j) = omega(x_i, P x_j)
  };
  const double h = step;
  Mat g;
  if (t - h >= lambda.a && t + h <= lambda.b) {
    g = (gram_at(t + h) - gram_at(t - h)) / (2 * h);
  } else if (t + 2 * h <= lambda.b) {
    g = (-3.0 * gram_at(t) + 4.0 * gram_at(t + h) - gram_at(t + 2 * h)) / (2 * h);
  } else if (t - 2 * h >= lambda.a) {
    g = (3.0 * gram_at(t) - 4.0 * gram_at(t - h) + gram_at(t - 2 * h)) / (2 * h);
  } else {
    throw std::invalid_argument("q_derivative_form: interval too short for the step");
  }
  return g;
}

}  // namespace

Mat q_derivative_matrix_on(const SymplecticSpace& sp, const LagrangianPath& lambda,
                           double t, const Mat& domain, double step) {
  return hermitian_part(derivative_matrix(sp, lambda, t, domain, step));
}

HermitianForm q_derivative_form(const SymplecticSpace& sp, const LagrangianPath& lambda,
                                double t, const Tolerances& tol, double step) {
  (void)tol;
  const Mat domain = qr_orthonormalize(lambda.frame(t));
  const Mat raw = derivative_matrix(sp, lambda, t, domain, step);
  const double scale = std::max(1.0, raw.cwiseAbs().maxCoeff());
  if ((raw - raw.adjoint()).cwiseAbs().maxCoeff() > 1e-4 * scale)
    throw std::runtime_error("q_derivative_form: derivative form is not Hermitian");
  return HermitianForm{domain, hermitian_part(raw)};
}

Mat graph_tangent_matrix_on(const SymplecticSpace& base, const Mat& gamma,
                            const Mat& gamma_dot, const Mat& domain_top) {
  // omega(-gamma^{-1} gamma_dot u_i, u_j) on graph vectors (u, gamma u).
  const Mat w = -gamma.partialPivLu().solve(gamma_dot * domain_top);
  return hermitian_part(base.omega_gram(w, domain_top));
}

HermitianForm crossing_form(const SymplecticSpace& sp, const LagrangianPath& lambda,
                            const LagrangianPath& mu, double t, const Tolerances& tol,
                            double step, double domain_angle) {
  const Mat fl = qr_orthonormalize(lambda.frame(t));
  const Mat fm = qr_orthonormalize(mu.frame(t));
  const Mat domain = (domain_angle > 0) ? near_intersection(fl, fm, domain_angle)
                                        : frame_intersect(fl, fm, tol.rank_tol);
  if (domain.cols() == 0) return HermitianForm{domain, Mat(0, 0)};
  const Mat ql = q_derivative_matrix_on(sp, lambda, t, domain, step);
  const Mat qm = mu.constant ? Mat(Mat::Zero(domain.cols(), domain.cols()))
                             : q_derivative_matrix_on(sp, mu, t, domain, step);
  return HermitianForm{domain, Mat(ql - qm)};
}

}  // namespace sik
