// frame.hpp — subspaces of C^{2n} as orthonormal column frames

#pragma once

#include "sik/space.hpp"

namespace sik {

// A subspace is represented by a 2n x k matrix with orthonormal columns;
// only the span is meaningful. k = 0 (the zero subspace) is legal everywhere.

inline Mat empty_frame(Eigen::Index ambient_dim) { return Mat(ambient_dim, 0); }

Mat orthonormalize(const Mat& m, double rank_tol);

bool is_orthonormal_frame(const Mat& f, double tol = 1e-8);

Mat frame_sum(const Mat& f1, const Mat& f2, double rank_tol);
Mat frame_intersect(const Mat& f1, const Mat& f2, double rank_tol);

// omega-annihilator F^omega = {x : omega(x, y) = 0 for all y in F}.
Mat annihilator(const SymplecticSpace& sp, const Mat& f, double rank_tol);

bool is_isotropic(const SymplecticSpace& sp, const Mat& f, double gram_tol);
bool is_lagrangian(const SymplecticSpace& sp, const Mat& f, const Tolerances& tol);

bool span_contains(const Mat& big, const Mat& small, double rank_tol);
bool same_span(const Mat& f1, const Mat& f2, double rank_tol);

// Smallest principal angle between two spans (frames must be orthonormal).
double principal_angle_min(const Mat& f1, const Mat& f2);

// Directions of span(f1) within max_angle of span(f2) (principal-vector
// pairs). With exact inputs and max_angle -> 0 this is the intersection; a
// positive max_angle tolerates the acos noise floor near actual crossings.
Mat near_intersection(const Mat& f1, const Mat& f2, double max_angle);

// Block product A x B inside a doubled space: [[A,0],[0,B]].
Mat product_frame(const Mat& top, const Mat& bottom);

// Graph(M) = {(x, Mx)} as an orthonormal frame in the doubled space.
Mat graph_frame(const Mat& m);

// Swap the two factors of a doubled space: f(x, y) = (y, x).
Mat swap_factors(const Mat& f);

// e^{Js} gamma; maps Lagrangians to Lagrangians.
Mat rotate_lagrangian(const SymplecticSpace& sp, const Mat& f, double s);

// Quotient eps^omega / eps of an isotropic subspace, realized on the
// orthogonal complement of eps inside eps^omega. project() implements the
// reduction pi_eps(delta) = image of delta cap eps^omega.
struct IsotropicReduction {
  SymplecticSpace quotient;
  Mat section;      // 2n x 2(n-e), orthonormal, spans eps^omega ∩ eps^perp
  Mat eps;          // the reduced-by subspace
  Mat eps_omega;    // its annihilator

  Mat project(const Mat& sub_frame, double rank_tol) const;
};

IsotropicReduction reduce_by_isotropic(const SymplecticSpace& sp, const Mat& eps,
                                       const Tolerances& tol);

}  // namespace sik
