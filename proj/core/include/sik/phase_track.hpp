// phase_track.hpp — continuous eigenphase tracking of a unitary family

#pragma once

#include "sik/linalg.hpp"

#include <functional>
#include <vector>

namespace sik {

// Continuous arguments theta_j(s) with e^{i theta_j(s)} the eigenvalues of a
// unitary family, matched step to step by a minimum total circular-distance
// assignment. Steps whose best matching still moves some phase by >= pi/2
// are bisected until the budget runs out.
struct EigenphaseTrace {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> phases;
  double max_matched_jump = 0.0;
  int evaluations = 0;
  bool complete = true;

  const Eigen::VectorXd& start() const { return phases.front(); }
  const Eigen::VectorXd& end() const { return phases.back(); }
};

EigenphaseTrace track_unitary_eigenphases(const std::function<Mat(double)>& u,
                                          double a, double b,
                                          std::vector<double> seed_knots,
                                          int extra_budget = 1 << 14);

// Sorted principal arguments of the eigenvalues of a (near-)unitary matrix.
Eigen::VectorXd unitary_eigenphases(const Mat& u);

// Minimum total circular distance assignment of 'to' onto 'from';
// returns the matched phases 'from' + wrapped increments, and the largest
// single increment via max_jump.
Eigen::VectorXd match_phases(const Eigen::VectorXd& from, const Eigen::VectorXd& to,
                             double* max_jump);

}  // namespace sik
