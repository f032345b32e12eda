#include "sik/path.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace sik {

namespace {
constexpr double kTimeEps = 1e-12;
}

SymplecticPath::SymplecticPath(double tau, std::vector<PathSegment> segments)
    : tau_(tau), segments_(std::move(segments)) {
  if (tau_ < 0) throw std::invalid_argument("path duration must be >= 0");
  if (segments_.empty()) throw std::invalid_argument("path needs at least one segment");
  if (std::abs(segments_.front().t0) > kTimeEps)
    throw std::invalid_argument("first segment must start at t = 0");
  for (std::size_t i = 1; i < segments_.size(); ++i)
    if (segments_[i].t0 <= segments_[i - 1].t0)
      throw std::invalid_argument("segment breakpoints must increase");
}

SymplecticPath SymplecticPath::constant(const Mat& value, double tau) {
  PathSegment s{0.0, Mat::Zero(value.rows(), value.cols()), value};
  return SymplecticPath(tau, {std::move(s)});
}

SymplecticPath SymplecticPath::identity(Eigen::Index dim, double tau) {
  return constant(Mat::Identity(dim, dim), tau);
}

SymplecticPath SymplecticPath::single_generator(const Mat& gen, double tau, const Mat& base) {
  Mat b = base.size() ? base : Mat(Mat::Identity(gen.rows(), gen.cols()));
  return SymplecticPath(tau, {PathSegment{0.0, gen, std::move(b)}});
}

SymplecticPath SymplecticPath::from_generator_field(const SymplecticSpace& sp,
                                                    const std::function<Mat(double)>& b,
                                                    double tau, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (tau == 0.0) return identity(sp.dim(), 0.0);
  const double dt = tau / steps;
  const auto lu = sp.J().partialPivLu();
  std::vector<PathSegment> segs;
  segs.reserve(steps);
  Mat g = Mat::Identity(sp.dim(), sp.dim());
  for (int k = 0; k < steps; ++k) {
    const double t0 = k * dt;
    Mat gen = -lu.solve(b(t0 + 0.5 * dt));
    segs.push_back(PathSegment{t0, gen, g});
    g = matrix_exp(gen * dt) * g;
  }
  return SymplecticPath(tau, std::move(segs));
}

SymplecticPath SymplecticPath::from_samples(double tau,
                                            const std::vector<std::pair<double, Mat>>& samples) {
  if (samples.size() < 1) throw std::invalid_argument("from_samples: empty sample list");
  if (std::abs(samples.front().first) > kTimeEps)
    throw std::invalid_argument("from_samples: first sample must be at t = 0");
  if (samples.size() == 1) return constant(samples.front().second, tau);
  if (std::abs(samples.back().first - tau) > 1e-9 * std::max(1.0, tau))
    throw std::invalid_argument("from_samples: last sample must be at t = tau");
  std::vector<PathSegment> segs;
  segs.reserve(samples.size() - 1);
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    const double t0 = samples[k].first, t1 = samples[k + 1].first;
    if (t1 <= t0) throw std::invalid_argument("from_samples: times must increase");
    const Mat& g0 = samples[k].second;
    const Mat& g1 = samples[k + 1].second;
    const Mat gen = matrix_log(g1 * g0.partialPivLu().inverse()) / (t1 - t0);
    segs.push_back(PathSegment{t0, gen, g0});
  }
  return SymplecticPath(tau, std::move(segs));
}

Eigen::Index SymplecticPath::find_segment(double t) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double v, const PathSegment& s) { return v < s.t0; });
  if (it == segments_.begin()) return 0;
  return std::distance(segments_.begin(), std::prev(it));
}

Mat SymplecticPath::value(double t) const {
  t = std::clamp(t, 0.0, tau_);
  const PathSegment& s = segments_[find_segment(t)];
  const double dt = t - s.t0;
  if (dt == 0.0) return s.base;
  return matrix_exp(s.gen * dt) * s.base;
}

std::vector<double> SymplecticPath::knots() const {
  std::vector<double> k;
  k.reserve(segments_.size() + 1);
  for (const auto& s : segments_) k.push_back(s.t0);
  k.push_back(tau_);
  return k;
}

SymplecticPath SymplecticPath::head(double t1) const {
  if (t1 < 0 || t1 > tau_ + kTimeEps) throw std::invalid_argument("head: bad cut");
  std::vector<PathSegment> segs;
  for (const auto& s : segments_) {
    if (s.t0 < t1 - kTimeEps || segs.empty()) segs.push_back(s);
  }
  return SymplecticPath(t1, std::move(segs));
}

SymplecticPath SymplecticPath::tail(double t1) const {
  if (t1 < 0 || t1 > tau_ + kTimeEps) throw std::invalid_argument("tail: bad cut");
  const Mat inv = value(t1).partialPivLu().inverse();
  std::vector<PathSegment> segs;
  const Eigen::Index first = find_segment(std::min(t1, tau_));
  // Segment containing t1, restarted there.
  const PathSegment& sf = segments_[first];
  segs.push_back(PathSegment{0.0, sf.gen, value(t1) * inv});
  for (std::size_t i = first + 1; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    segs.push_back(PathSegment{s.t0 - t1, s.gen, s.base * inv});
  }
  return SymplecticPath(tau_ - t1, std::move(segs));
}

SymplecticPath SymplecticPath::reversed() const {
  // On [tau - end_i, tau - t0_i] the reversed path is
  // exp(-gen_i (t - (tau - end_i))) * value(end_i).
  std::vector<PathSegment> segs;
  segs.reserve(segments_.size());
  for (std::size_t i = segments_.size(); i-- > 0;) {
    const auto& s = segments_[i];
    const double end = (i + 1 < segments_.size()) ? segments_[i + 1].t0 : tau_;
    segs.push_back(PathSegment{tau_ - end, Mat(-s.gen),
                               matrix_exp(s.gen * (end - s.t0)) * s.base});
  }
  return SymplecticPath(tau_, std::move(segs));
}

SymplecticPath SymplecticPath::left_multiplied(const Mat& l) const {
  const Mat linv = l.partialPivLu().inverse();
  std::vector<PathSegment> segs;
  segs.reserve(segments_.size());
  for (const auto& s : segments_)
    segs.push_back(PathSegment{s.t0, l * s.gen * linv, l * s.base});
  return SymplecticPath(tau_, std::move(segs));
}

SymplecticPath SymplecticPath::right_multiplied(const Mat& r) const {
  std::vector<PathSegment> segs;
  segs.reserve(segments_.size());
  for (const auto& s : segments_)
    segs.push_back(PathSegment{s.t0, s.gen, s.base * r});
  return SymplecticPath(tau_, std::move(segs));
}

SymplecticPath SymplecticPath::time_scaled(double factor) const {
  if (factor <= 0) throw std::invalid_argument("time_scaled: factor must be > 0");
  std::vector<PathSegment> segs;
  segs.reserve(segments_.size());
  for (const auto& s : segments_)
    segs.push_back(PathSegment{s.t0 * factor, s.gen / factor, s.base});
  return SymplecticPath(tau_ * factor, std::move(segs));
}

double SymplecticPath::max_symplecticity_drift(const SymplecticSpace& sp) const {
  double worst = 0.0;
  for (double t : knots()) {
    const Mat g = value(t);
    worst = std::max(worst, (g.adjoint() * sp.J() * g - sp.J()).cwiseAbs().maxCoeff());
  }
  return worst;
}

SymplecticPath concat(const std::vector<SymplecticPath>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat: no parts");
  std::vector<PathSegment> segs;
  double t_off = 0.0;
  Mat m_tilde = Mat::Identity(parts.front().dim(), parts.front().dim());
  for (const auto& p : parts) {
    for (const auto& s : p.segments())
      segs.push_back(PathSegment{t_off + s.t0, s.gen, s.base * m_tilde});
    m_tilde = p.endpoint() * m_tilde;
    t_off += p.tau();
  }
  // Zero-length parts can produce coincident breakpoints; drop duplicates.
  std::vector<PathSegment> cleaned;
  for (auto& s : segs) {
    if (!cleaned.empty() && s.t0 <= cleaned.back().t0 + kTimeEps) cleaned.back() = std::move(s);
    else cleaned.push_back(std::move(s));
  }
  return SymplecticPath(t_off, std::move(cleaned));
}

SymplecticPath iterate_path(const SymplecticPath& gamma, int k) {
  if (k < 1) throw std::invalid_argument("iterate_path: k must be >= 1");
  return concat(std::vector<SymplecticPath>(k, gamma));
}

MatrixPath MatrixPath::constant(const Mat& m, double a, double b) {
  return MatrixPath{a, b, [m](double) { return m; }, {a, b}};
}

MatrixPath as_matrix_path(const SymplecticPath& p) {
  auto shared = std::make_shared<SymplecticPath>(p);
  return MatrixPath{0.0, p.tau(), [shared](double t) { return shared->value(t); },
                    p.knots()};
}

namespace {
std::vector<double> merge_knots(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < kTimeEps; }),
            out.end());
  return out;
}
}  // namespace

MatrixPath pointwise_product(const MatrixPath& f, const MatrixPath& g) {
  if (std::abs(f.a - g.a) > kTimeEps || std::abs(f.b - g.b) > kTimeEps)
    throw std::invalid_argument("pointwise_product: parameter ranges differ");
  auto fv = f.value, gv = g.value;
  return MatrixPath{f.a, f.b, [fv, gv](double t) -> Mat { return fv(t) * gv(t); },
                    merge_knots(f.knots, g.knots)};
}

MatrixPath reparametrized(const MatrixPath& f, const std::function<double(double)>& u,
                          double a, double b) {
  auto fv = f.value;
  // Knots cannot be pulled back without inverting u; resample uniformly.
  std::vector<double> knots;
  const int n = std::max<int>(33, static_cast<int>(f.knots.size()) * 4);
  for (int i = 0; i <= n; ++i) knots.push_back(a + (b - a) * i / n);
  return MatrixPath{a, b, [fv, u](double t) { return fv(u(t)); }, std::move(knots)};
}

}  // namespace sik
