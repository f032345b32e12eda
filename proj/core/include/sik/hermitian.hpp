// hermitian.hpp — Hermitian forms on subspaces: inertia, the form
// Q(alpha, beta; gamma), derivative forms along Lagrangian paths, and
// crossing forms.

#pragma once

#include "sik/lagrangian_path.hpp"

namespace sik {

struct InertiaTriple {
  int plus = 0, zero = 0, minus = 0;
  int signature() const { return plus - minus; }
  int dim() const { return plus + zero + minus; }
  bool operator==(const InertiaTriple&) const = default;
};

// A Hermitian form on span(basis); matrix(i, j) = form(basis_i, basis_j).
struct HermitianForm {
  Mat basis;   // ambient column vectors spanning the domain
  Mat matrix;  // k x k Hermitian
  Eigen::Index dim() const { return matrix.rows(); }
};

// Eigenvalue sign counts. The cutoff is inertia_tol relative to the largest
// absolute eigenvalue, with an absolute fallback when the form is
// numerically zero.
InertiaTriple inertia_of(const Mat& h, double inertia_tol);
InertiaTriple inertia_of(const HermitianForm& f, const Tolerances& tol);

// Ambient frame spanning {x : form(x, .) = 0}.
Mat form_kernel(const HermitianForm& f, const Tolerances& tol);

// Q(alpha, beta; gamma) on alpha cap (beta + gamma):
// for x = -y + z with y in beta, z in gamma, Q(x1, x2) = omega(x1, y2).
// Inputs must be isotropic; the minimum-norm decomposition is used.
HermitianForm q_form(const SymplecticSpace& sp, const Mat& alpha, const Mat& beta,
                     const Mat& gamma, const Tolerances& tol);
// Same form evaluated on prescribed domain vectors (columns must lie in
// alpha cap (beta + gamma)).
Mat q_form_matrix_on(const SymplecticSpace& sp, const Mat& beta, const Mat& gamma,
                     const Mat& domain, const Tolerances& tol);

// Derivative form Q(lambda, t)(x, y) = d/ds omega(x, y(s))|_{s=t} with
// y(s) in lambda(s), y(t) = y. Central differences with the given step;
// one-sided second-order stencils at the ends of the parameter interval.
HermitianForm q_derivative_form(const SymplecticSpace& sp, const LagrangianPath& lambda,
                                double t, const Tolerances& tol, double step = 1e-5);
Mat q_derivative_matrix_on(const SymplecticSpace& sp, const LagrangianPath& lambda,
                           double t, const Mat& domain, double step);

// Tangent form of a graph path at gamma with velocity gamma_dot, evaluated on
// graph vectors (u, gamma u): value omega(-gamma^{-1} gamma_dot u, v).
Mat graph_tangent_matrix_on(const SymplecticSpace& base, const Mat& gamma,
                            const Mat& gamma_dot, const Mat& domain_top);

// Crossing form Gamma(lambda, mu, t) = Q(lambda, t) - Q(mu, t) on
// lambda(t) cap mu(t). A positive domain_angle widens the domain to
// principal-vector pairs within that angle, which keeps crossings located
// only up to the acos noise floor from being lost.
HermitianForm crossing_form(const SymplecticSpace& sp, const LagrangianPath& lambda,
                            const LagrangianPath& mu, double t, const Tolerances& tol,
                            double step = 1e-5, double domain_angle = 0.0);

}  // namespace sik
