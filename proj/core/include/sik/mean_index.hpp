// mean_index.hpp — Maslov-type indices along torus translation flows and
// the mean-index estimator.

#pragma once

#include "sik/iteration.hpp"

namespace sik {

// phi(t, xi) = xi + t v mod 1 on the d-torus; Lebesgue measure is invariant,
// and the flow is ergodic when v has rationally independent components.
struct FlowSpec {
  Eigen::VectorXd velocity;

  int dim() const { return static_cast<int>(velocity.size()); }
  Eigen::VectorXd advance(const Eigen::VectorXd& xi, double t) const;
};

// B(xi) = H0 + sum_k [ C_k cos(2 pi k.xi) + S_k sin(2 pi k.xi) ] with all
// coefficient matrices Hermitian, so B(xi) is Hermitian for every xi.
struct FieldTerm {
  Eigen::VectorXi wave;
  bool is_sin = false;
  Mat coeff;
};

struct FieldSpec {
  std::vector<FieldTerm> terms;

  Eigen::Index op_dim() const { return terms.empty() ? 0 : terms.front().coeff.rows(); }
  Mat value(const Eigen::VectorXd& xi) const;
  // Certified c with -c(-J^2)^{1/2} <= B(xi) <= c(-J^2)^{1/2} for all xi,
  // from coefficient operator norms.
  double certified_bound(const SymplecticSpace& sp) const;
  // max |k.v| over the terms (0 for constant fields).
  double max_frequency(const FlowSpec& flow) const;
  void validate() const;
};

// Fundamental solution of x' = -J^{-1} B(t) x by midpoint-frozen
// exponentials on the global grid t_k = k * step; exactly symplectic in
// every step. tau must be a multiple of step (grid alignment keeps the flow
// cocycle exact for shifted trajectories).
SymplecticPath fundamental_solution(const SymplecticSpace& sp,
                                    const std::function<Mat(double)>& b, double tau,
                                    double step);

// Default step: 1/64 of the shortest field oscillation period, snapped to
// 1 / 2^k so that integer horizons sit on the grid.
double default_step(const FieldSpec& field, const FlowSpec& flow);

// i_tau(xi) = i_1 of the fundamental solution along t -> B(phi(t, xi)).
long index_along_flow(const SymplecticSpace& sp, const FlowSpec& flow,
                      const FieldSpec& field, const Eigen::VectorXd& xi, double tau,
                      double step, const Tolerances& tol);

struct MeanIndexRow {
  double tau = 0.0;
  long i_tau = 0;
  double ratio = 0.0;
  double band_lo = 0.0, band_hi = 0.0;  // a-priori ratio band at this tau
  double cauchy_gap = -1.0;             // |ratio - previous ratio|, -1 for the first row
};

struct MeanIndexReport {
  Eigen::VectorXd xi;
  std::vector<MeanIndexRow> rows;
  double f_hat = 0.0;        // last ratio
  double bound_c = 0.0;      // certified field bound
  bool ratios_in_band = true;
};

MeanIndexReport mean_index_estimate(const SymplecticSpace& sp, const FlowSpec& flow,
                                    const FieldSpec& field, const Eigen::VectorXd& xi,
                                    const std::vector<double>& schedule, double step,
                                    const Tolerances& tol);

// Subadditivity checks: i_{s+t}(xi) <= i_s(xi) + i_t(phi(s,xi)) with lower
// defect -m, the floor/fraction splitting, and the four-term commutation
// bound. s and t must sit on the integrator grid.
AuditReport subadditivity_audit(const SymplecticSpace& sp, const FlowSpec& flow,
                                const FieldSpec& field, const Eigen::VectorXd& xi,
                                const std::vector<std::pair<double, double>>& pairs,
                                double step, const Tolerances& tol);

// Pointwise-ordered fields give ordered indices. The ordering hypothesis is
// certified on a sample grid; a violated hypothesis rejects the instance.
AuditReport monotonicity_audit(const SymplecticSpace& sp, const FlowSpec& flow,
                               const FieldSpec& b0, const FieldSpec& b1,
                               const Eigen::VectorXd& xi, double tau, double step,
                               const Tolerances& tol);

}  // namespace sik
