#include "sik/lagrangian_path.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace sik {

LagrangianPath constant_lagrangian(const Mat& f, double a, double b) {
  return LagrangianPath{a, b, [f](double) { return f; }, {a, b}, true};
}

LagrangianPath graph_path(const MatrixPath& gamma) {
  auto v = gamma.value;
  auto frame = [v](double s) {
    const Mat g = v(s);
    Mat f(2 * g.rows(), g.cols());
    f.topRows(g.rows()) = Mat::Identity(g.rows(), g.cols());
    f.bottomRows(g.rows()) = g;
    return f;
  };
  return LagrangianPath{gamma.a, gamma.b, std::move(frame), gamma.knots, false};
}

LagrangianPath graph_path(const SymplecticPath& gamma) {
  return graph_path(as_matrix_path(gamma));
}

LagrangianPath rotation_path(const SymplecticSpace& sp, const Mat& f, double s0, double s1) {
  auto shared = std::make_shared<SymplecticSpace>(sp);
  auto frame = [shared, f](double s) -> Mat { return shared->rotation(s) * f; };
  if (s1 <= s0) throw std::invalid_argument("rotation_path: need s0 < s1");
  return LagrangianPath{s0, s1, std::move(frame), {s0, s1}, false};
}

LagrangianPath unitary_geodesic(const SymplecticSpace& sp, const Mat& from, const Mat& to) {
  const Mat u1 = polar_unitary(sp.generator_of(from));
  const Mat u2 = polar_unitary(sp.generator_of(to));
  const Mat w = u2 * u1.adjoint();
  // Principal log of the unitary w: phases in (-pi, pi].
  Eigen::ComplexEigenSolver<Mat> es(w);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("unitary_geodesic: eigensolver failed");
  const Mat s_vecs = polar_unitary(es.eigenvectors());
  Eigen::VectorXd phases(w.rows());
  for (Eigen::Index k = 0; k < w.rows(); ++k)
    phases(k) = std::arg(es.eigenvalues()(k));
  auto shared = std::make_shared<SymplecticSpace>(sp);
  auto frame = [shared, s_vecs, phases, u1](double s) {
    Vec ph(phases.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
      ph(k) = std::exp(cd(0, s * phases(k)));
    const Mat ws = s_vecs * ph.asDiagonal() * s_vecs.adjoint();
    return shared->frame_of_generator(ws * u1);
  };
  return LagrangianPath{0.0, 1.0, std::move(frame), {0.0, 1.0}, false};
}

LagrangianPath transformed(const LagrangianPath& p, const Mat& t) {
  auto f = p.frame;
  return LagrangianPath{p.a, p.b, [f, t](double s) -> Mat { return t * f(s); }, p.knots, p.constant};
}

LagrangianPath concat_lagrangian(const std::vector<LagrangianPath>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_lagrangian: no parts");
  auto shared = std::make_shared<std::vector<LagrangianPath>>(parts);
  const double n = static_cast<double>(parts.size());
  auto frame = [shared](double s) {
    const auto& ps = *shared;
    int i = std::min(static_cast<int>(std::floor(s)), static_cast<int>(ps.size()) - 1);
    if (i < 0) i = 0;
    const auto& p = ps[i];
    const double local = p.a + (p.b - p.a) * std::clamp(s - i, 0.0, 1.0);
    return p.frame(local);
  };
  std::vector<double> knots;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    for (double k : p.knots) {
      const double span = (p.b - p.a);
      knots.push_back(i + (span > 0 ? (k - p.a) / span : 0.0));
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  if (knots.empty() || knots.front() > 0.0) knots.insert(knots.begin(), 0.0);
  if (knots.back() < n) knots.push_back(n);
  return LagrangianPath{0.0, n, std::move(frame), std::move(knots), false};
}

}  // namespace sik
