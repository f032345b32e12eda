#include "sik/phase_track.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sik {

Eigen::VectorXd unitary_eigenphases(const Mat& u) {
  if (u.rows() == 0) return Eigen::VectorXd(0);
  Eigen::ComplexEigenSolver<Mat> es(u, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("unitary_eigenphases: eigensolver failed");
  Eigen::VectorXd ph(u.rows());
  for (Eigen::Index k = 0; k < u.rows(); ++k) ph(k) = std::arg(es.eigenvalues()(k));
  std::sort(ph.data(), ph.data() + ph.size());
  return ph;
}

namespace {

double circ_dist(double x, double y) { return std::abs(wrap_angle(x - y)); }

// Exact min-cost assignment by subset DP; k stays small (<= 16).
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  const int k = static_cast<int>(cost.rows());
  if (k == 0) return {};
  if (k > 20) throw std::invalid_argument("assignment dimension too large");
  const std::size_t full = std::size_t{1} << k;
  std::vector<double> best(full, std::numeric_limits<double>::infinity());
  std::vector<int> pick(full, -1);
  best[0] = 0.0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (!std::isfinite(best[mask])) continue;
    const int row = __builtin_popcountll(mask);
    if (row >= k) continue;
    for (int col = 0; col < k; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const std::size_t next = mask | (std::size_t{1} << col);
      const double c = best[mask] + cost(row, col);
      if (c < best[next]) {
        best[next] = c;
        pick[next] = col;
      }
    }
  }
  std::vector<int> assign(k, -1);
  std::size_t mask = full - 1;
  for (int row = k - 1; row >= 0; --row) {
    const int col = pick[mask];
    assign[row] = col;
    mask &= ~(std::size_t{1} << col);
  }
  return assign;
}

}  // namespace

Eigen::VectorXd match_phases(const Eigen::VectorXd& from, const Eigen::VectorXd& to,
                             double* max_jump) {
  const int k = static_cast<int>(from.size());
  Eigen::MatrixXd cost(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cost(i, j) = circ_dist(from(i), to(j));
  const std::vector<int> assign = min_cost_assignment(cost);
  Eigen::VectorXd matched(k);
  double worst = 0.0;
  for (int i = 0; i < k; ++i) {
    const double inc = wrap_angle(to(assign[i]) - from(i));
    matched(i) = from(i) + inc;
    worst = std::max(worst, std::abs(inc));
  }
  if (max_jump) *max_jump = worst;
  return matched;
}

EigenphaseTrace track_unitary_eigenphases(const std::function<Mat(double)>& u,
                                          double a, double b,
                                          std::vector<double> seed_knots,
                                          int extra_budget) {
  EigenphaseTrace trace;
  std::sort(seed_knots.begin(), seed_knots.end());
  seed_knots.erase(std::unique(seed_knots.begin(), seed_knots.end()), seed_knots.end());
  std::erase_if(seed_knots, [&](double t) { return t < a || t > b; });
  if (seed_knots.empty() || seed_knots.front() > a) seed_knots.insert(seed_knots.begin(), a);
  if (seed_knots.back() < b) seed_knots.push_back(b);

  Eigen::VectorXd theta = unitary_eigenphases(u(a));
  trace.evaluations = 1;
  trace.times.push_back(a);
  trace.phases.push_back(theta);
  if (theta.size() == 0 || a == b) return trace;

  int budget = extra_budget;

  // Advance from (t0, theta0) to t1, bisecting while the matched jump is too
  // large. Phases at already-computed right endpoints are cached by value.
  struct Frame { double t1; Eigen::VectorXd phases_at_t1; bool have_phases; };
  std::vector<Frame> stack;

  auto phases_at = [&](double t) {
    trace.evaluations++;
    return unitary_eigenphases(u(t));
  };

  for (std::size_t i = 0; i + 1 < seed_knots.size(); ++i) {
    stack.push_back(Frame{seed_knots[i + 1], Eigen::VectorXd(), false});
    while (!stack.empty()) {
      Frame fr = std::move(stack.back());
      stack.pop_back();
      const double t0 = trace.times.back();
      const Eigen::VectorXd raw = fr.have_phases ? fr.phases_at_t1 : phases_at(fr.t1);
      double jump = 0.0;
      const Eigen::VectorXd cand = match_phases(theta, raw, &jump);
      if (jump >= kPi / 2 && budget > 0 && (fr.t1 - t0) > 1e-13 * (b - a)) {
        --budget;
        const double mid = 0.5 * (t0 + fr.t1);
        stack.push_back(Frame{fr.t1, raw, true});
        stack.push_back(Frame{mid, Eigen::VectorXd(), false});
        continue;
      }
      if (jump >= kPi / 2) trace.complete = false;
      trace.max_matched_jump = std::max(trace.max_matched_jump, jump);
      theta = cand;
      trace.times.push_back(fr.t1);
      trace.phases.push_back(theta);
    }
  }
  return trace;
}

}  // namespace sik
