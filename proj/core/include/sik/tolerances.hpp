#pragma once

#include <stdexcept>

namespace sik {

// Numerical cutoffs used throughout the kit. rank_tol is a relative
// singular-value cutoff, inertia_tol a relative eigenvalue-sign cutoff,
// int_tol the snap distance for integer extraction, sympl_tol the allowed
// drift for symplecticity / isotropy Gram checks.
struct Tolerances {
  double rank_tol    = 1e-8;
  double inertia_tol = 1e-7;
  double int_tol     = 1e-6;
  double sympl_tol   = 1e-8;

  void validate() const {
    if (rank_tol <= 0 || inertia_tol <= 0 || int_tol <= 0 || sympl_tol <= 0)
      throw std::invalid_argument("tolerances must be positive");
    if (rank_tol >= 1) throw std::invalid_argument("rank_tol must be < 1");
  }
};

}  // namespace sik
