// rng.hpp — seeded random matrices; identical seeds give identical output

#pragma once

#include "sik/space.hpp"

#include <cstdint>
#include <random>

namespace sik {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double gauss() { return normal_(eng_); }
  double uniform() { return unif_(eng_); }
  cd cgauss() { return cd(gauss(), gauss()) / std::sqrt(2.0); }

  Mat cgaussian(Eigen::Index rows, Eigen::Index cols);

  // Haar-distributed unitary (QR of a complex Gaussian, phases fixed).
  Mat unitary(Eigen::Index k);

  Mat hermitian(Eigen::Index k, double scale = 1.0);

  std::uint64_t sub_seed() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

// Exact Lagrangian by construction: span(V^- + V^+ U) for Haar-random U.
Mat random_lagrangian(const SymplecticSpace& sp, std::uint64_t seed);
Mat random_lagrangian(const SymplecticSpace& sp, Rng& rng);

// exp(-J^{-1} B) for a random Hermitian B of the given scale.
Mat random_symplectic(const SymplecticSpace& sp, std::uint64_t seed, double scale = 1.0);
Mat random_symplectic(const SymplecticSpace& sp, Rng& rng, double scale = 1.0);

// Random k-dimensional subspace of span(within).
Mat random_subspace_of(const Mat& within, Eigen::Index k, Rng& rng, double rank_tol);

}  // namespace sik
