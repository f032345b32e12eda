// maslov.hpp — Maslov index of Lagrangian pair paths (eigenphase and
// crossing-form algorithms) and the Maslov-type index of symplectic paths.

#pragma once

#include "sik/hermitian.hpp"
#include "sik/phase_track.hpp"

#include <string>

namespace sik {

// E(a) = a for integer a, floor(a) + 1 otherwise; values within int_tol of an
// integer are snapped first.
long e_ceil(double a, double int_tol);
long e_floor(double a, double int_tol);

enum class MaslovSign { plus, minus };

struct IndexReport {
  long value = 0;
  std::string method;

  // eigenphase diagnostics
  int evaluations = 0;
  double max_matched_jump = 0.0;
  Eigen::VectorXd phases_start, phases_end;

  // crossing diagnostics
  std::vector<double> crossing_times;
  std::vector<int> crossing_signs;

  // nullities at the ends where applicable
  long nullity_start = -1, nullity_end = -1;
};

// Mas_{+/-} of a pair of Lagrangian paths over [a, b]: graph coordinates over
// V^-, eigenphases of U(s)V(s)^{-1} tracked continuously, endpoint phases
// snapped and fed through E (plus) or floor (minus).
IndexReport maslov_index(const SymplecticSpace& sp, const LagrangianPath& lambda,
                         const LagrangianPath& mu, MaslovSign sign,
                         const Tolerances& tol);

// Crossing-form evaluation: m^+(Gamma(a)) - m^-(Gamma(b)) + interior
// signature sum. Requires regular crossings; throws on a degenerate one.
IndexReport maslov_index_crossings(const SymplecticSpace& sp, const LagrangianPath& lambda,
                                   const LagrangianPath& mu, const Tolerances& tol,
                                   int scan_samples = 512);

// Maslov-type index i_W(gamma) = Mas{Graph(gamma), W} in the doubled space
// (V + V, (-omega) + omega). W is a Lagrangian frame there.
IndexReport maslov_type_index(const SymplecticSpace& base, const MatrixPath& gamma,
                              const Mat& w, const Tolerances& tol);
IndexReport maslov_type_index(const SymplecticSpace& base, const SymplecticPath& gamma,
                              const Mat& w, const Tolerances& tol);

// i_1 = i_{Graph(I)}.
long i_one(const SymplecticSpace& base, const SymplecticPath& gamma, const Tolerances& tol);

long nullity_one(const Mat& endpoint, double rank_tol);             // dim ker(M - I)
long nullity_p(const Mat& endpoint, const Mat& p, double rank_tol); // dim ker(M - P)
long nullity_w(const Mat& endpoint, const Mat& w, double rank_tol); // dim(Graph(M) cap W)

}  // namespace sik
