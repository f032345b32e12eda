// space.hpp — complex symplectic vector spaces and their graph splittings

#pragma once

#include "sik/linalg.hpp"
#include "sik/tolerances.hpp"

namespace sik {

// A complex symplectic vector space C^{2n} carrying
//   omega(x, y) = <Jx, y> = y^H J x,
// where the inner product is the standard Hermitian one (linear in the first
// slot), iJ is self-adjoint and invertible, and iJ has zero signature so
// Lagrangian subspaces exist. Values are immutable after construction.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(Mat j, double tol = 1e-10);

  // C^{2n} with the block structure J0 = [[0, -I], [I, 0]].
  static SymplecticSpace standard(int half_dim);

  int dim() const { return static_cast<int>(j_.rows()); }
  int half_dim() const { return dim() / 2; }
  const Mat& J() const { return j_; }

  cd omega(const Vec& x, const Vec& y) const;
  // G(i, j) = omega(x_i, y_j) for column frames X, Y.
  Mat omega_gram(const Mat& x, const Mat& y) const;

  // (V + V, (-omega) + omega), the home of graphs of symplectic maps.
  SymplecticSpace doubled() const;
  // (V, -omega).
  SymplecticSpace negated() const;

  // Graph splitting V = V^- + V^+ where V^- is the positive eigenspace of iJ
  // and V^+ the negative one. Columns are scaled so that the generator of a
  // Lagrangian subspace comes out exactly unitary.
  const Mat& basis_minus() const { return vminus_; }
  const Mat& basis_plus() const { return vplus_; }

  // Generator U of a Lagrangian frame: span F = {m + U m-coordinates...},
  // i.e. F = basis_minus * A + basis_plus * (U * A) for invertible A.
  // Throws if the V^- component is (numerically) singular.
  Mat generator_of(const Mat& lagrangian_frame) const;
  // Raw frame basis_minus + basis_plus * U of the Lagrangian with generator U.
  Mat frame_of_generator(const Mat& u) const;

  Mat rotation(double s) const;  // e^{Js}, unitary and symplectic
  Mat j_one() const;             // (-J^2)^{-1/2} J, squares to -I
  Mat j_sqrt() const;            // (-J^2)^{1/2}

 private:
  SymplecticSpace() = default;
  Mat j_;
  Mat vminus_, vplus_;
  Mat split_inv_;                 // inverse of [vminus_ vplus_]
  Mat ij_vecs_;                   // unitary eigenvectors of iJ
  Eigen::VectorXd ij_vals_;       // corresponding real eigenvalues
};

// L^* J_dst L == J_src within tol (relative to ||J_src||).
bool is_symplectic_map(const SymplecticSpace& src, const SymplecticSpace& dst,
                       const Mat& l, double tol);
inline bool is_symplectic_map(const SymplecticSpace& sp, const Mat& l, double tol) {
  return is_symplectic_map(sp, sp, l, tol);
}

}  // namespace sik
