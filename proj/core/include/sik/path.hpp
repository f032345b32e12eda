// path.hpp — symplectic paths as exact piecewise exponentials

#pragma once

#include "sik/space.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace sik {

// On [t0, t1) the path is value(t) = exp(gen * (t - t0)) * base.
struct PathSegment {
  double t0 = 0.0;
  Mat gen;
  Mat base;
};

// A continuous path [0, tau] -> Sp(V) stored segment-wise. Concatenation,
// iteration, reversal and constant multiplications are exact (segment
// algebra only); evaluation anywhere is a single matrix exponential.
class SymplecticPath {
 public:
  SymplecticPath(double tau, std::vector<PathSegment> segments);

  static SymplecticPath constant(const Mat& value, double tau);
  static SymplecticPath identity(Eigen::Index dim, double tau);
  // t -> exp(gen * t) * base
  static SymplecticPath single_generator(const Mat& gen, double tau, const Mat& base = Mat());
  // Midpoint-frozen exponentials of the linear Hamiltonian field
  // x' = -J^{-1} B(t) x; exactly symplectic in every step.
  static SymplecticPath from_generator_field(const SymplecticSpace& sp,
                                             const std::function<Mat(double)>& b,
                                             double tau, int steps);
  // Piecewise geodesic (principal log) through the given samples.
  static SymplecticPath from_samples(double tau,
                                     const std::vector<std::pair<double, Mat>>& samples);

  double tau() const { return tau_; }
  Eigen::Index dim() const { return segments_.empty() ? 0 : segments_.front().base.rows(); }
  const std::vector<PathSegment>& segments() const { return segments_; }

  Mat value(double t) const;
  Mat start() const { return segments_.front().base; }
  Mat endpoint() const { return value(tau_); }

  std::vector<double> knots() const;  // segment breakpoints including 0 and tau

  SymplecticPath head(double t1) const;              // restriction to [0, t1]
  SymplecticPath tail(double t1) const;              // t -> value(t1 + t) value(t1)^{-1}
  SymplecticPath reversed() const;                   // t -> value(tau - t)
  SymplecticPath left_multiplied(const Mat& l) const;
  SymplecticPath right_multiplied(const Mat& r) const;
  SymplecticPath time_scaled(double factor) const;   // t -> value(t / factor), tau *= factor

  double max_symplecticity_drift(const SymplecticSpace& sp) const;

 private:
  double tau_;
  std::vector<PathSegment> segments_;  // sorted by t0, first at 0
  Eigen::Index find_segment(double t) const;
};

// Iteration of paths starting at the identity: the l-th part runs as
// gamma_l(t - T_{l-1}) * M_{l-1} * ... * M_1.
SymplecticPath concat(const std::vector<SymplecticPath>& parts);
SymplecticPath iterate_path(const SymplecticPath& gamma, int k);

// A generic continuous matrix path; the common currency for index
// computations (pointwise products of structured paths land here).
struct MatrixPath {
  double a = 0.0, b = 1.0;
  std::function<Mat(double)> value;
  std::vector<double> knots;  // sorted, includes a and b

  static MatrixPath constant(const Mat& m, double a = 0.0, double b = 1.0);
};

MatrixPath as_matrix_path(const SymplecticPath& p);
MatrixPath pointwise_product(const MatrixPath& f, const MatrixPath& g);
// Strictly increasing time change u: [a,b] -> [f.a, f.b] with the endpoints fixed.
MatrixPath reparametrized(const MatrixPath& f, const std::function<double(double)>& u,
                          double a, double b);

}  // namespace sik
