// linalg.hpp — dense complex helpers shared by the whole kit

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace sik {

using cd  = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi    = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Rank decisions: a singular value counts iff
// sigma > rank_tol * max(sigma_max, floor_scale).
// For orthonormal-frame stacks sigma_max >= 1, so the floor is inert there;
// it matters for kernels like ker(M - I) where the matrix itself may vanish.
Eigen::Index svd_rank(const Mat& m, double rank_tol, double floor_scale = 1.0);

// Orthonormal basis of the column span (empty input allowed).
Mat span_basis(const Mat& m, double rank_tol);

// Rank-preserving orthonormalization of a full-column-rank matrix (thin QR).
// Unlike span_basis this never drops columns, so badly scaled but genuinely
// independent frames (graphs of hyperbolically growing maps) survive.
Mat qr_orthonormalize(const Mat& m);

// Orthonormal basis of {x : m x = 0}.
Mat right_nullspace(const Mat& m, double rank_tol, double floor_scale = 1.0);

Mat matrix_exp(const Mat& a);
Mat matrix_log(const Mat& a);

// Nearest unitary factor (polar decomposition).
Mat polar_unitary(const Mat& a);

inline Mat hermitian_part(const Mat& a) { return 0.5 * (a + a.adjoint()); }

// Wrap into (-pi, pi].
double wrap_angle(double phi);

// a snapped to the nearest integer when within int_tol of it.
double snap_to_int(double a, double int_tol);

}  // namespace sik
