#include "sik/mean_index.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace sik {

Eigen::VectorXd FlowSpec::advance(const Eigen::VectorXd& xi, double t) const {
  Eigen::VectorXd out = xi + t * velocity;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) -= std::floor(out(i));
  return out;
}

Mat FieldSpec::value(const Eigen::VectorXd& xi) const {
  validate();
  Mat b = Mat::Zero(op_dim(), op_dim());
  for (const auto& t : terms) {
    const double phase = kTwoPi * t.wave.cast<double>().dot(xi);
    b += t.coeff * (t.is_sin ? std::sin(phase) : std::cos(phase));
  }
  return b;
}

double FieldSpec::certified_bound(const SymplecticSpace& sp) const {
  double sum = 0.0;
  for (const auto& t : terms) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(t.coeff), Eigen::EigenvaluesOnly);
    sum += es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Mat> js(sp.j_sqrt(), Eigen::EigenvaluesOnly);
  const double lam_min = js.eigenvalues().minCoeff();
  return sum / lam_min;
}

double FieldSpec::max_frequency(const FlowSpec& flow) const {
  double f = 0.0;
  for (const auto& t : terms)
    f = std::max(f, std::abs(t.wave.cast<double>().dot(flow.velocity)));
  return f;
}

void FieldSpec::validate() const {
  if (terms.empty()) throw std::invalid_argument("field: no terms");
  const Eigen::Index d = op_dim();
  for (const auto& t : terms) {
    if (t.coeff.rows() != d || t.coeff.cols() != d)
      throw std::invalid_argument("field: coefficient size mismatch");
    if ((t.coeff - t.coeff.adjoint()).cwiseAbs().maxCoeff() >
        1e-10 * std::max(1.0, t.coeff.cwiseAbs().maxCoeff()))
      throw std::invalid_argument("field: coefficient is not Hermitian");
  }
}

SymplecticPath fundamental_solution(const SymplecticSpace& sp,
                                    const std::function<Mat(double)>& b, double tau,
                                    double step) {
  if (step <= 0) throw std::invalid_argument("fundamental_solution: step must be > 0");
  if (tau == 0.0) return SymplecticPath::identity(sp.dim(), 0.0);
  const double ratio = tau / step;
  const long steps = std::lround(ratio);
  if (steps < 1 || std::abs(ratio - steps) > 1e-9)
    throw std::invalid_argument("fundamental_solution: tau must be a multiple of step");
  return SymplecticPath::from_generator_field(sp, b, tau, static_cast<int>(steps));
}

double default_step(const FieldSpec& field, const FlowSpec& flow) {
  const double f = field.max_frequency(flow);
  double step = (f == 0.0) ? 1.0 / 16 : 1.0 / (64.0 * f);
  // Snap to a power of two so integer horizons align with the grid.
  double snapped = 1.0 / 16;
  while (snapped > step && snapped > 1.0 / 4096) snapped /= 2;
  return snapped;
}

namespace {

// Frames of Graph(gamma(t)) propagated step by step with periodic
// re-orthonormalization (discrete QR). The fundamental solution of a
// hyperbolic system grows like e^{mu t}, so forming gamma(t) itself destroys
// (or overflows) the graph subspace on long horizons; the propagated frame
// only ever multiplies by single-step exponentials of moderate norm.
struct PropagatedGraph {
  double step = 0.0;
  long steps = 0;
  int block = 16;
  std::function<Mat(long)> step_exp;  // exp of the k-th step generator
  std::vector<Mat> checkpoints;       // orthonormal frames every 'block' steps
  Eigen::Index m = 0;

  Mat frame_at(double s) const {
    long k = static_cast<long>(std::floor(s / step + 1e-9));
    k = std::max<long>(0, std::min<long>(k, steps));
    const long cp = std::min<long>(k / block, static_cast<long>(checkpoints.size()) - 1);
    Mat f = checkpoints[static_cast<std::size_t>(cp)];
    long at = cp * block;
    while (at < k) {
      f.bottomRows(m) = step_exp(at) * f.bottomRows(m);
      ++at;
    }
    const double rest = s - static_cast<double>(at) * step;
    if (rest > 1e-12 && at < steps) {
      // Partial step: exp scales linearly in time inside one frozen segment.
      f.bottomRows(m) = (step_exp_partial(at, rest)) * f.bottomRows(m);
    }
    return f;
  }

  std::function<Mat(long, double)> partial;
  Mat step_exp_partial(long k, double dt) const { return partial(k, dt); }
};

}  // namespace

long index_along_flow(const SymplecticSpace& sp, const FlowSpec& flow,
                      const FieldSpec& field, const Eigen::VectorXd& xi, double tau,
                      double step, const Tolerances& tol) {
  if (tau < 0) throw std::invalid_argument("index_along_flow: tau must be >= 0");
  if (tau == 0.0) return 0;
  const double ratio = tau / step;
  const long steps = std::lround(ratio);
  if (steps < 1 || std::abs(ratio - steps) > 1e-9)
    throw std::invalid_argument("index_along_flow: tau must be a multiple of step");

  const Eigen::Index m = sp.dim();
  const auto lu = std::make_shared<Eigen::PartialPivLU<Mat>>(sp.J().partialPivLu());
  auto shared_field = std::make_shared<FieldSpec>(field);
  auto shared_flow = std::make_shared<FlowSpec>(flow);
  auto gen_at = [lu, shared_field, shared_flow, xi, step](long k) -> Mat {
    const Eigen::VectorXd at = shared_flow->advance(xi, (k + 0.5) * step);
    return -lu->solve(shared_field->value(at));
  };

  auto pg = std::make_shared<PropagatedGraph>();
  pg->step = step;
  pg->steps = steps;
  pg->m = m;
  pg->step_exp = [gen_at, step](long k) { return matrix_exp(gen_at(k) * step); };
  pg->partial = [gen_at](long k, double dt) { return matrix_exp(gen_at(k) * dt); };

  // One sequential sweep builds the checkpoints.
  Mat f(2 * m, m);
  f.topRows(m) = Mat::Identity(m, m);
  f.bottomRows(m) = Mat::Identity(m, m);
  f = qr_orthonormalize(f);
  pg->checkpoints.push_back(f);
  for (long k = 0; k < steps; ++k) {
    f.bottomRows(m) = pg->step_exp(k) * f.bottomRows(m);
    f = qr_orthonormalize(f);
    if ((k + 1) % pg->block == 0) pg->checkpoints.push_back(f);
  }

  // Knot spacing below the phase-aliasing bound for the certified field norm.
  const double speed = std::max(2.0 * field.certified_bound(sp), 0.5);
  const double spacing = std::min(0.25, (kPi / 2) / (8.0 * speed));
  std::vector<double> knots;
  for (double t = 0.0; t < tau; t += spacing) knots.push_back(t);
  knots.push_back(tau);

  LagrangianPath lam{0.0, tau, [pg](double s) { return pg->frame_at(s); },
                     std::move(knots), false};
  const SymplecticSpace dbl = sp.doubled();
  const Mat w = graph_frame(Mat::Identity(m, m));
  IndexReport rep = maslov_index(dbl, lam, constant_lagrangian(w, 0.0, tau),
                                 MaslovSign::plus, tol);
  return rep.value;
}

MeanIndexReport mean_index_estimate(const SymplecticSpace& sp, const FlowSpec& flow,
                                    const FieldSpec& field, const Eigen::VectorXd& xi,
                                    const std::vector<double>& schedule, double step,
                                    const Tolerances& tol) {
  if (schedule.empty()) throw std::invalid_argument("mean_index_estimate: empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("mean_index_estimate: schedule must increase");
  MeanIndexReport rep;
  rep.xi = xi;
  rep.bound_c = field.certified_bound(sp);
  const double m = static_cast<double>(sp.dim());
  double prev_ratio = 0.0;
  bool have_prev = false;
  for (double tau : schedule) {
    MeanIndexRow row;
    row.tau = tau;
    row.i_tau = index_along_flow(sp, flow, field, xi, tau, step, tol);
    row.ratio = static_cast<double>(row.i_tau) / tau;
    const double x = rep.bound_c * tau / kTwoPi;
    row.band_lo = -m * std::floor(x) / tau;
    row.band_hi = m * static_cast<double>(e_ceil(x, tol.int_tol)) / tau;
    if (row.ratio < row.band_lo - 1e-12 || row.ratio > row.band_hi + 1e-12)
      rep.ratios_in_band = false;
    if (have_prev) row.cauchy_gap = std::abs(row.ratio - prev_ratio);
    prev_ratio = row.ratio;
    have_prev = true;
    rep.rows.push_back(row);
  }
  rep.f_hat = rep.rows.back().ratio;
  return rep;
}

namespace {

void require_on_grid(double t, double step, const char* who) {
  const double k = t / step;
  if (std::abs(k - std::round(k)) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": time must sit on the integrator grid");
}

}  // namespace

AuditReport subadditivity_audit(const SymplecticSpace& sp, const FlowSpec& flow,
                                const FieldSpec& field, const Eigen::VectorXd& xi,
                                const std::vector<std::pair<double, double>>& pairs,
                                double step, const Tolerances& tol) {
  AuditReport rep;
  const double m = static_cast<double>(sp.dim());
  auto idx = [&](const Eigen::VectorXd& base, double tau) {
    return static_cast<double>(index_along_flow(sp, flow, field, base, tau, step, tol));
  };
  int id = 0;
  for (auto [s, t] : pairs) {
    require_on_grid(s, step, "subadditivity_audit");
    require_on_grid(t, step, "subadditivity_audit");
    const std::string tag = "p" + std::to_string(id++) + "-";
    const double i_s = idx(xi, s);
    const double i_t_shift = idx(flow.advance(xi, s), t);
    const double i_st = idx(xi, s + t);
    rep.add(tag + "subadd-upper", i_st, "<=", i_s + i_t_shift);
    rep.add(tag + "subadd-lower", i_s + i_t_shift - m, "<=", i_st);

    const double total = s + t;
    const double fl = std::floor(total);
    const double fr = total - fl;
    require_on_grid(fr, step, "subadditivity_audit");
    const double i_fl = idx(xi, fl);
    const double i_fr = idx(flow.advance(xi, fl), fr);
    rep.add(tag + "floor-split-upper", idx(xi, total), "<=", i_fl + i_fr);
    rep.add(tag + "floor-split-lower", i_fl + i_fr - m, "<=", idx(xi, total));

    const double i_s_at_t = idx(flow.advance(xi, t), s);
    const double i_t_plain = idx(xi, t);
    const double i_t_at_s = i_t_shift;
    const double four = i_s_at_t + i_t_plain - i_s - i_t_at_s;
    rep.add(tag + "commute-lower", -m, "<=", four);
    rep.add(tag + "commute-upper", four, "<=", m);
  }
  return rep;
}

AuditReport monotonicity_audit(const SymplecticSpace& sp, const FlowSpec& flow,
                               const FieldSpec& b0, const FieldSpec& b1,
                               const Eigen::VectorXd& xi, double tau, double step,
                               const Tolerances& tol) {
  require_on_grid(tau, step, "monotonicity_audit");
  // Certify the ordering hypothesis on the integration grid (the frozen
  // midpoints are exactly the field values the solutions see).
  const long steps = std::lround(tau / step);
  for (long k = 0; k < steps; ++k) {
    const Eigen::VectorXd at = flow.advance(xi, (k + 0.5) * step);
    const Mat diff = b1.value(at) - b0.value(at);
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(diff), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
      throw std::invalid_argument("monotonicity_audit: ordering hypothesis fails on grid");
  }
  AuditReport rep;
  const long i0 = index_along_flow(sp, flow, b0, xi, tau, step, tol);
  const long i1 = index_along_flow(sp, flow, b1, xi, tau, step, tol);
  rep.add("index-monotone", static_cast<double>(i0), "<=", static_cast<double>(i1));
  return rep;
}

}  // namespace sik
