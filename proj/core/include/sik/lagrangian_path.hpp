// lagrangian_path.hpp — continuous families of Lagrangian subspaces

#pragma once

#include "sik/frame.hpp"
#include "sik/path.hpp"

namespace sik {

// frame(s) must have full column rank and span lambda(s); only the span is
// used, so the frame need not be orthonormal. knots are mandatory sample
// points for index computations (segment breakpoints and the like).
struct LagrangianPath {
  double a = 0.0, b = 1.0;
  std::function<Mat(double)> frame;
  std::vector<double> knots;
  bool constant = false;
};

LagrangianPath constant_lagrangian(const Mat& f, double a = 0.0, double b = 1.0);

// s -> Graph(gamma(s)) in the doubled space.
LagrangianPath graph_path(const MatrixPath& gamma);
LagrangianPath graph_path(const SymplecticPath& gamma);

// s -> e^{Js} f for s in [s0, s1].
LagrangianPath rotation_path(const SymplecticSpace& sp, const Mat& f, double s0, double s1);

// Geodesic in unitary-graph coordinates from one Lagrangian to another,
// parametrized on [0, 1]: graph of exp(s log(U2 U1^{-1})) U1 with the
// principal logarithm.
LagrangianPath unitary_geodesic(const SymplecticSpace& sp, const Mat& from, const Mat& to);

// Pointwise image under a fixed invertible map.
LagrangianPath transformed(const LagrangianPath& p, const Mat& t);

// Joins paths end to start, reparametrized to [0, parts.size()].
LagrangianPath concat_lagrangian(const std::vector<LagrangianPath>& parts);

}  // namespace sik
