// triple.hpp — the triple index of Lagrangian triples and the Hormander
// index of quadruples, each by independent routes.

#pragma once

#include "sik/maslov.hpp"

namespace sik {

// i(a, b, c) = m^+(Q(a, b; c)) + dim(a cap c) - dim(a cap b cap c).
IndexReport triple_index(const SymplecticSpace& sp, const Mat& a, const Mat& b,
                         const Mat& c, const Tolerances& tol);

// i(a, b, c) = m^-(Q(a, d; b)) + m^-(Q(b, d; c)) - m^-(Q(a, d; c)) for any
// Lagrangian d transversal to a, b and c; d is found by probing e^{Js} c
// over a fixed decreasing sequence of s.
IndexReport triple_index_via_delta(const SymplecticSpace& sp, const Mat& a, const Mat& b,
                                   const Mat& c, const Tolerances& tol);

// s(l1, l2; m1, m2) as the common value of the two triple-index expressions
// i(l1,l2,m2) - i(l1,l2,m1) and i(l1,m1,m2) - i(l2,m1,m2); throws if the two
// disagree (which would signal a numerical failure, never a result).
IndexReport hormander_index(const SymplecticSpace& sp, const Mat& l1, const Mat& l2,
                            const Mat& m1, const Mat& m2, const Tolerances& tol);

// s(l1, l2; m1, m2) = Mas{lambda, m2} - Mas{lambda, m1} along a connecting
// Lagrangian path from l1 to l2 (unitary-graph geodesic).
IndexReport hormander_via_paths(const SymplecticSpace& sp, const Mat& l1, const Mat& l2,
                                const Mat& m1, const Mat& m2, const Tolerances& tol);

// First e^{Js} base (s from {1e-1, ..., 1e-6}) transversal to every frame in
// avoid; throws if the probe budget is exhausted.
Mat find_transversal(const SymplecticSpace& sp, const std::vector<Mat>& avoid,
                     const Mat& base, const Tolerances& tol);

}  // namespace sik
