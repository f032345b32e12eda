#include "sik/maslov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sik {

long e_ceil(double a, double int_tol) {
  const double s = snap_to_int(a, int_tol);
  const double r = std::round(s);
  if (s == r) return static_cast<long>(r);
  return static_cast<long>(std::floor(s)) + 1;
}

long e_floor(double a, double int_tol) {
  const double s = snap_to_int(a, int_tol);
  const double r = std::round(s);
  if (s == r) return static_cast<long>(r);
  return static_cast<long>(std::floor(s));
}

namespace {

std::vector<double> merged_knots(const LagrangianPath& lambda, const LagrangianPath& mu,
                                 int fill) {
  std::vector<double> k = lambda.knots;
  k.insert(k.end(), mu.knots.begin(), mu.knots.end());
  const double a = lambda.a, b = lambda.b;
  for (int i = 0; i <= fill; ++i) k.push_back(a + (b - a) * i / fill);
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

void check_ranges(const LagrangianPath& lambda, const LagrangianPath& mu) {
  if (std::abs(lambda.a - mu.a) > 1e-12 || std::abs(lambda.b - mu.b) > 1e-12)
    throw std::invalid_argument("maslov_index: paths must share the parameter interval");
}

}  // namespace

IndexReport maslov_index(const SymplecticSpace& sp, const LagrangianPath& lambda,
                         const LagrangianPath& mu, MaslovSign sign, const Tolerances& tol) {
  check_ranges(lambda, mu);
  const Eigen::Index n = sp.half_dim();
  IndexReport rep;
  rep.method = "maslov-eigenphase";
  if (n == 0 || lambda.a == lambda.b) return rep;

  // Generators are constant along constant paths; cache them.
  Mat gen_mu_cached, gen_lambda_cached;
  if (mu.constant) gen_mu_cached = polar_unitary(sp.generator_of(mu.frame(mu.a))).adjoint();
  if (lambda.constant) gen_lambda_cached = polar_unitary(sp.generator_of(lambda.frame(lambda.a)));

  auto w_of = [&](double s) -> Mat {
    const Mat ul = lambda.constant ? gen_lambda_cached
                                   : polar_unitary(sp.generator_of(lambda.frame(s)));
    const Mat vm_inv = mu.constant ? gen_mu_cached
                                   : polar_unitary(sp.generator_of(mu.frame(s))).adjoint();
    return ul * vm_inv;
  };

  // Seed the tracker with both paths' knots plus a uniform fill; the pi/2
  // matching guard drives further bisection.
  const int fill = 64;
  EigenphaseTrace trace =
      track_unitary_eigenphases(w_of, lambda.a, lambda.b, merged_knots(lambda, mu, fill));
  if (!trace.complete)
    throw std::runtime_error("maslov_index: refinement budget exhausted");

  rep.evaluations = trace.evaluations;
  rep.max_matched_jump = trace.max_matched_jump;
  rep.phases_start = trace.start();
  rep.phases_end = trace.end();

  long total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double ta = trace.start()(j) / kTwoPi;
    const double tb = trace.end()(j) / kTwoPi;
    if (sign == MaslovSign::plus)
      total += e_ceil(tb, tol.int_tol) - e_ceil(ta, tol.int_tol);
    else
      total += e_floor(tb, tol.int_tol) - e_floor(ta, tol.int_tol);
  }
  rep.value = total;
  if (sign == MaslovSign::minus) rep.method = "maslov-eigenphase-minus";
  return rep;
}

namespace {

// Smallest principal angle between the two spans at s.
double gap_at(const LagrangianPath& lambda, const LagrangianPath& mu, double s) {
  const Mat fl = qr_orthonormalize(lambda.frame(s));
  const Mat fm = qr_orthonormalize(mu.frame(s));
  return principal_angle_min(fl, fm);
}

// Ternary search for the minimum of a V-shaped dip.
double refine_minimum(const std::function<double(double)>& f, double lo, double hi) {
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2)) hi = m2;
    else lo = m1;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

IndexReport maslov_index_crossings(const SymplecticSpace& sp, const LagrangianPath& lambda,
                                   const LagrangianPath& mu, const Tolerances& tol,
                                   int scan_samples) {
  check_ranges(lambda, mu);
  IndexReport rep;
  rep.method = "maslov-crossings";
  const double a = lambda.a, b = lambda.b;
  constexpr double kAngleTol = 1e-7;

  auto gap = [&](double s) { return gap_at(lambda, mu, s); };

  // Gamma on the near-touching directions at s; empty when transversal.
  // The tolerant domain absorbs the acos noise floor at refined crossings.
  constexpr double kDomainAngle = 1e-6;
  auto gamma_at = [&](double s) {
    return crossing_form(sp, lambda, mu, s, tol, 1e-5, kDomainAngle);
  };

  const HermitianForm ga = gamma_at(a);
  const HermitianForm gb = gamma_at(b);
  const InertiaTriple ia = inertia_of(ga, tol);
  const InertiaTriple ib = inertia_of(gb, tol);
  if (ia.zero > 0 || ib.zero > 0)
    throw std::runtime_error("maslov_index_crossings: degenerate endpoint crossing");
  rep.nullity_start = ga.dim();
  rep.nullity_end = gb.dim();

  long total = ia.plus - ib.minus;

  // Scan for interior dips of the principal-angle gap.
  std::vector<double> grid = merged_knots(lambda, mu, scan_samples);
  std::vector<double> gaps(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) gaps[i] = gap(grid[i]);

  const double edge_guard = (b - a) * 1e-9;
  std::vector<double> crossings;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (gaps[i] <= gaps[i - 1] && gaps[i] <= gaps[i + 1] && gaps[i] < 1e-2) {
      const double s = refine_minimum(gap, grid[i - 1], grid[i + 1]);
      if (gap(s) >= kAngleTol) continue;      // near miss
      if (s - a < edge_guard || b - s < edge_guard) continue;  // endpoint crossing
      if (!crossings.empty() && std::abs(crossings.back() - s) < 1e-8 * (b - a)) continue;
      crossings.push_back(s);
    }
  }

  for (double s : crossings) {
    const HermitianForm g = gamma_at(s);
    if (g.dim() == 0)
      throw std::runtime_error("maslov_index_crossings: lost crossing after refinement");
    const InertiaTriple it = inertia_of(g, tol);
    if (it.zero > 0)
      throw std::runtime_error("maslov_index_crossings: non-regular interior crossing");
    rep.crossing_times.push_back(s);
    rep.crossing_signs.push_back(it.signature());
    total += it.signature();
  }

  rep.value = total;
  return rep;
}

IndexReport maslov_type_index(const SymplecticSpace& base, const MatrixPath& gamma,
                              const Mat& w, const Tolerances& tol) {
  const SymplecticSpace dbl = base.doubled();
  if (!is_lagrangian(dbl, w, tol))
    throw std::invalid_argument("maslov_type_index: W is not Lagrangian in the doubled space");
  IndexReport rep = maslov_index(dbl, graph_path(gamma),
                                 constant_lagrangian(w, gamma.a, gamma.b),
                                 MaslovSign::plus, tol);
  rep.method = "maslov-type";
  return rep;
}

IndexReport maslov_type_index(const SymplecticSpace& base, const SymplecticPath& gamma,
                              const Mat& w, const Tolerances& tol) {
  return maslov_type_index(base, as_matrix_path(gamma), w, tol);
}

long i_one(const SymplecticSpace& base, const SymplecticPath& gamma, const Tolerances& tol) {
  const Mat id = Mat::Identity(base.dim(), base.dim());
  return maslov_type_index(base, gamma, graph_frame(id), tol).value;
}

long nullity_one(const Mat& endpoint, double rank_tol) {
  const Mat id = Mat::Identity(endpoint.rows(), endpoint.cols());
  return nullity_p(endpoint, id, rank_tol);
}

long nullity_p(const Mat& endpoint, const Mat& p, double rank_tol) {
  return static_cast<long>(right_nullspace(endpoint - p, rank_tol).cols());
}

long nullity_w(const Mat& endpoint, const Mat& w, double rank_tol) {
  return static_cast<long>(frame_intersect(graph_frame(endpoint), w, rank_tol).cols());
}

}  // namespace sik
