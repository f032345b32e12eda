#include "sik/iteration.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sik {

void AuditReport::add(std::string name, double lhs, std::string relation, double rhs) {
  AuditCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = std::move(relation);
  constexpr double eps = 1e-9;
  if (c.relation == "==") c.pass = std::abs(lhs - rhs) <= eps;
  else if (c.relation == "<=") c.pass = lhs <= rhs + eps;
  else if (c.relation == ">=") c.pass = lhs >= rhs - eps;
  else throw std::invalid_argument("unknown relation " + c.relation);
  checks.push_back(std::move(c));
}

IterationData iteration_data(const std::vector<SymplecticPath>& parts) {
  IterationData d;
  Mat prod = Mat::Identity(parts.front().dim(), parts.front().dim());
  double t = 0.0;
  for (const auto& p : parts) {
    d.endpoint.push_back(p.endpoint());
    prod = p.endpoint() * prod;
    d.partial_product.push_back(prod);
    t += p.tau();
    d.partial_time.push_back(t);
  }
  return d;
}

BrakeStructure BrakeStructure::standard(const SymplecticSpace& sp) {
  const Eigen::Index n = sp.half_dim();
  BrakeStructure bs;
  bs.alpha1 = Mat::Identity(sp.dim(), sp.dim()).leftCols(n);
  bs.alpha2 = Mat::Identity(sp.dim(), sp.dim()).rightCols(n);
  Mat nm = Mat::Identity(sp.dim(), sp.dim());
  nm.topLeftCorner(n, n) *= -1.0;
  bs.n_map = nm;
  return bs;
}

SymplecticPath brake_iterate(const SymplecticPath& gamma, int k, const BrakeStructure& bs) {
  if (k < 1) throw std::invalid_argument("brake_iterate: k must be >= 1");
  const double tau = gamma.tau();
  const Mat m = gamma.endpoint();
  const Mat& nm = bs.n_map;
  const Mat poincare = nm * m.partialPivLu().solve(nm * m);  // N M^{-1} N M
  const SymplecticPath eta =
      gamma.reversed().left_multiplied(nm).right_multiplied(nm);

  std::vector<PathSegment> segs;
  Mat p_pow = Mat::Identity(m.rows(), m.cols());  // poincare^j for the current piece
  for (int piece = 0; piece < k; ++piece) {
    const bool forward = (piece % 2 == 0);
    if (!forward) p_pow = poincare * p_pow;  // entering the j-th backward piece
    const SymplecticPath& src = forward ? gamma : eta;
    const double off = piece * tau;
    for (const auto& s : src.segments())
      segs.push_back(PathSegment{off + s.t0, s.gen, s.base * p_pow});
  }
  return SymplecticPath(k * tau, std::move(segs));
}

long elliptic_height(const Mat& m, double circle_tol) {
  if (m.rows() == 0) return 0;
  Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("elliptic_height: eigensolver failed");
  long count = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (std::abs(std::abs(es.eigenvalues()(i)) - 1.0) <= circle_tol) ++count;
  return count;
}

bool in_l0(const Mat& a, const Mat& b, const Mat& g, double rank_tol) {
  const Mat lhs = frame_sum(frame_intersect(a, g, rank_tol),
                            frame_intersect(b, g, rank_tol), rank_tol);
  const Mat rhs = frame_intersect(frame_sum(a, b, rank_tol), g, rank_tol);
  return lhs.cols() == rhs.cols();
}

L0Decomposition l0_decomposition(const SymplecticSpace& doubled, const Mat& mu,
                                 const BrakeStructure& bs, const Tolerances& tol) {
  const Mat a1t = product_frame(bs.alpha1, bs.alpha1);
  const Mat a2t = product_frame(bs.alpha2, bs.alpha2);
  if (!in_l0(a1t, a2t, mu, tol.rank_tol))
    throw std::invalid_argument("l0_decomposition: mu is not in L0(alpha1~, alpha2~)");
  L0Decomposition d;
  d.p1 = frame_intersect(a1t, mu, tol.rank_tol);
  d.p2 = frame_intersect(a2t, mu, tol.rank_tol);
  const Mat diag1 = graph_frame(Mat::Identity(doubled.dim() / 2, doubled.dim() / 2));
  // Graph(I|alpha_j) = {(x, x) : x in alpha_j}.
  Mat g1(doubled.dim(), bs.alpha1.cols());
  g1 << bs.alpha1, bs.alpha1;
  Mat g2(doubled.dim(), bs.alpha2.cols());
  g2 << bs.alpha2, bs.alpha2;
  d.s1 = frame_intersect(d.p1, orthonormalize(g1, tol.rank_tol), tol.rank_tol);
  d.s2 = frame_intersect(d.p2, orthonormalize(g2, tol.rank_tol), tol.rank_tol);
  (void)diag1;
  return d;
}

Mat l0_member_from_part(const SymplecticSpace& doubled, const Mat& part,
                        const Mat& other_factor, const Tolerances& tol) {
  const Mat comp = frame_intersect(annihilator(doubled, part, tol.rank_tol),
                                   other_factor, tol.rank_tol);
  return frame_sum(part, comp, tol.rank_tol);
}

SymplecticPath random_symplectic_path(const SymplecticSpace& sp, std::uint64_t seed,
                                      double tau, int segments, double scale) {
  Rng rng(seed);
  const auto lu = sp.J().partialPivLu();
  std::vector<PathSegment> segs;
  Mat g = Mat::Identity(sp.dim(), sp.dim());
  const double dt = tau / segments;
  for (int i = 0; i < segments; ++i) {
    const Mat gen = -lu.solve(rng.hermitian(sp.dim(), scale));
    segs.push_back(PathSegment{i * dt, gen, g});
    g = matrix_exp(gen * dt) * g;
  }
  return SymplecticPath(tau, std::move(segs));
}

namespace {

Mat mat_pow(const Mat& m, int k) {
  Mat out = Mat::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = m * out;
  return out;
}

long dim_cap(const Mat& a, const Mat& b, double rank_tol) {
  return static_cast<long>(frame_intersect(a, b, rank_tol).cols());
}

}  // namespace

AuditReport audit_iteration_bounds(const SymplecticSpace& sp,
                                   const std::vector<SymplecticPath>& parts,
                                   const Tolerances& tol) {
  if (parts.size() < 2)
    throw std::invalid_argument("audit_iteration_bounds: need k >= 2 paths");
  AuditReport rep;
  const int k = static_cast<int>(parts.size());
  const long m = sp.dim();
  const IterationData data = iteration_data(parts);
  const SymplecticPath whole = concat(parts);

  long sum_i1 = 0, sum_nu = 0;
  for (const auto& p : parts) {
    sum_i1 += i_one(sp, p, tol);
    sum_nu += nullity_one(p.endpoint(), tol.rank_tol);
  }
  const long i1_whole = i_one(sp, whole, tol);

  // Kernel frames of M_l - I.
  std::vector<Mat> kernels;
  for (const auto& mat : data.endpoint)
    kernels.push_back(right_nullspace(mat - Mat::Identity(m, m), tol.rank_tol));

  Mat common = kernels.front();
  for (int l = 1; l < k; ++l) common = frame_intersect(common, kernels[l], tol.rank_tol);
  const long a_of_m = common.cols();

  long b_of_m = 0;
  for (int l = 1; l < k; ++l) {
    const Mat ker_tilde = right_nullspace(
        data.partial_product[l - 1] - Mat::Identity(m, m), tol.rank_tol);
    b_of_m += dim_cap(kernels[l], ker_tilde, tol.rank_tol);
  }
  for (int l = 1; l + 1 < k; ++l)
    b_of_m -= nullity_one(data.partial_product[l], tol.rank_tol);

  const long delta = i1_whole - sum_i1;
  rep.add("iter-lower", static_cast<double>(sum_nu - b_of_m - m * (k - 1)), "<=",
          static_cast<double>(delta));
  rep.add("iter-upper", static_cast<double>(delta), "<=",
          static_cast<double>(b_of_m - nullity_one(data.partial_product.back(), tol.rank_tol)));
  rep.add("iter-B-le-A", static_cast<double>(b_of_m), "<=", static_cast<double>(a_of_m));
  return rep;
}

AuditReport audit_gcd_bounds(const SymplecticSpace& sp, const SymplecticPath& gamma,
                             int k1, int k2, const Tolerances& tol) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("audit_gcd_bounds: k1, k2 >= 1");
  AuditReport rep;
  const long m = sp.dim();
  const Mat mat = gamma.endpoint();
  const int g = std::gcd(k1, k2);
  const long e = elliptic_height(mat);

  const long i_k1 = i_one(sp, iterate_path(gamma, k1), tol);
  const long i_k2 = i_one(sp, iterate_path(gamma, k2), tol);
  const long i_sum = i_one(sp, iterate_path(gamma, k1 + k2), tol);
  const long delta = i_sum - i_k1 - i_k2;

  const long nu_k1 = nullity_one(mat_pow(mat, k1), tol.rank_tol);
  const long nu_k2 = nullity_one(mat_pow(mat, k2), tol.rank_tol);
  const long nu_g = nullity_one(mat_pow(mat, g), tol.rank_tol);
  const long nu_sum = nullity_one(mat_pow(mat, k1 + k2), tol.rank_tol);

  rep.add("gcd-lower", nu_k1 + nu_k2 - nu_g - 0.5 * (e + m), "<=", static_cast<double>(delta));
  rep.add("gcd-upper", static_cast<double>(delta), "<=", nu_g - nu_sum + 0.5 * (e - m));
  return rep;
}

AuditReport audit_brake_inequalities(const SymplecticSpace& sp, const SymplecticPath& gamma,
                                     int k, const BrakeStructure& bs, std::uint64_t aux_seed,
                                     const Tolerances& tol) {
  AuditReport rep;
  const SymplecticSpace dbl = sp.doubled();
  const long n = sp.half_dim();
  const long nn = sp.dim();
  const double tau = gamma.tau();
  const Mat m_end = gamma.endpoint();
  const Mat& nm = bs.n_map;
  Rng rng(aux_seed);

  const Mat a1t = orthonormalize(product_frame(bs.alpha1, bs.alpha1), tol.rank_tol);
  const Mat a2t = orthonormalize(product_frame(bs.alpha2, bs.alpha2), tol.rank_tol);
  const Mat a21 = orthonormalize(product_frame(bs.alpha2, bs.alpha1), tol.rank_tol);
  const Mat graph_id = graph_frame(Mat::Identity(nn, nn));

  // Reversal identities.
  {
    const Mat w = random_lagrangian(dbl, rng.sub_seed());
    const SymplecticPath rev = gamma.reversed().right_multiplied(
        m_end.partialPivLu().inverse());
    const long lhs = maslov_type_index(sp.negated(), rev, w, tol).value;
    const long rhs = maslov_type_index(sp, gamma, swap_factors(w), tol).value;
    rep.add("reverse-identity", static_cast<double>(lhs), "==", static_cast<double>(rhs));

    const SymplecticPath revn = rev.left_multiplied(nm).right_multiplied(nm);
    Mat dn = Mat::Zero(2 * nn, 2 * nn);
    dn.topLeftCorner(nn, nn) = nm;
    dn.bottomRightCorner(nn, nn) = nm;
    const long lhs_n = maslov_type_index(sp, revn, w, tol).value;
    const long rhs_n = maslov_type_index(sp, gamma, swap_factors(dn * w), tol).value;
    rep.add("reverse-N-identity", static_cast<double>(lhs_n), "==",
            static_cast<double>(rhs_n));
  }

  // Split gamma into halves; the whole path is exactly their iteration.
  {
    const SymplecticPath g1 = gamma.head(tau / 2);
    const SymplecticPath g2 = gamma.tail(tau / 2);
    const long v = maslov_type_index(sp, gamma, a2t, tol).value -
                   maslov_type_index(sp, g1, a2t, tol).value - i_one(sp, g2, tol);
    const long nu2 = nullity_one(g2.endpoint(), tol.rank_tol);
    rep.add("two-part-alpha2-lower", static_cast<double>(nu2 - 2 * n), "<=",
            static_cast<double>(v));
    rep.add("two-part-alpha2-upper", static_cast<double>(v), "<=", 0.0);

    const Mat alpha = random_lagrangian(sp, rng.sub_seed());
    const Mat aa1 = orthonormalize(product_frame(alpha, bs.alpha1), tol.rank_tol);
    const Mat m1 = g1.endpoint();
    const Mat m2 = g2.endpoint();
    const long lhs_f = maslov_type_index(sp, gamma, aa1, tol).value -
                       maslov_type_index(sp, g1, aa1, tol).value -
                       maslov_type_index(sp, g2, a1t, tol).value;
    const Mat m1a = orthonormalize(m1 * alpha, tol.rank_tol);
    const Mat graph_m2 = graph_frame(m2);
    const Mat inter = frame_intersect(bs.alpha1, m1a, tol.rank_tol);
    const long quot = dim_cap(graph_m2, a1t, tol.rank_tol) -
                      dim_cap(graph_m2,
                              orthonormalize(product_frame(inter, bs.alpha1), tol.rank_tol),
                              tol.rank_tol);
    const long rhs_f = quot + dim_cap(m1a, bs.alpha1, tol.rank_tol) - n;
    rep.add("focal-lower", static_cast<double>(lhs_f), ">=", static_cast<double>(rhs_f));
  }

  // Brake iterates.
  {
    const SymplecticPath brk2 = brake_iterate(gamma, 2, bs);
    const SymplecticPath brk_k = brake_iterate(gamma, k, bs);
    const long i1_brk2 = i_one(sp, brk2, tol);
    const long nu1_brk2 = nullity_one(brk2.endpoint(), tol.rank_tol);

    const int q = (k - 1) / 2;
    const int rest = k - 2 * q;
    const SymplecticPath brk_rest = brake_iterate(gamma, rest, bs);
    const SymplecticPath brk_2q = brake_iterate(gamma, std::max(2 * q, 1), bs);
    const long nu1_2q = (q >= 1) ? nullity_one(brk_2q.endpoint(), tol.rank_tol)
                                 : static_cast<long>(2 * n);
    const long v = maslov_type_index(sp, brk_k, a2t, tol).value -
                   maslov_type_index(sp, brk_rest, a2t, tol).value - q * i1_brk2;
    rep.add("brake-symmetry-lower", static_cast<double>(q * (nu1_brk2 - 2 * n)), "<=",
            static_cast<double>(v));
    rep.add("brake-symmetry-upper", static_cast<double>(v), "<=",
            static_cast<double>(nu1_brk2 - nu1_2q));

    const long i_a1 = maslov_type_index(sp, gamma, a1t, tol).value;
    const long nu_a1 = nullity_w(m_end, a1t, tol.rank_tol);
    rep.add("brake-alpha2-vs-alpha1",
            static_cast<double>(maslov_type_index(sp, brk_k, a2t, tol).value), ">=",
            static_cast<double>(k * (i_a1 + nu_a1 - n)));

    const SymplecticPath brk3 = brake_iterate(gamma, 3, bs);
    const long i_a1_brk2 = maslov_type_index(sp, brk2, a1t, tol).value;
    const long nu_a1_brk2 = nullity_w(brk2.endpoint(), a1t, tol.rank_tol);
    rep.add("brake-odd",
            static_cast<double>(maslov_type_index(sp, brk3, a21, tol).value), ">=",
            static_cast<double>(i_a1 - n + i_a1_brk2 + nu_a1_brk2 - n));

    const Mat a12 = orthonormalize(product_frame(bs.alpha1, bs.alpha2), tol.rank_tol);
    rep.add("brake-nu-monotone", static_cast<double>(nullity_w(brk2.endpoint(), a1t, tol.rank_tol)),
            ">=", static_cast<double>(nullity_w(m_end, a12, tol.rank_tol)));
  }

  // Comparison of Maslov-type indices over the L0 family.
  {
    const Mat lambda = random_lagrangian(dbl, rng.sub_seed());
    const Eigen::Index d2 = 1 + static_cast<Eigen::Index>(rng.uniform() * (2 * n - 1));
    const Eigen::Index d1 = static_cast<Eigen::Index>(rng.uniform() * (d2 + 1));
    const Mat t2 = random_subspace_of(a2t, d2, rng, tol.rank_tol);
    const Mat t1 = random_subspace_of(t2, d1, rng, tol.rank_tol);
    const Mat mu1 = l0_member_from_part(dbl, t1, a1t, tol);
    const Mat mu2 = l0_member_from_part(dbl, t2, a1t, tol);
    const L0Decomposition dec1 = l0_decomposition(dbl, mu1, bs, tol);
    const L0Decomposition dec2 = l0_decomposition(dbl, mu2, bs, tol);

    const long s = hormander_index(dbl, graph_id, lambda, mu1, mu2, tol).value;
    const long i_l12 = triple_index(dbl, lambda, mu1, mu2, tol).value;
    const long i_l21 = triple_index(dbl, lambda, mu2, mu1, tol).value;
    rep.add("l0-eq-a", static_cast<double>(s), "==",
            static_cast<double>(dec2.s2.cols() - dec1.s2.cols() - i_l12));
    rep.add("l0-eq-b", static_cast<double>(s), "==",
            static_cast<double>(i_l21 - dec1.s1.cols() + dec2.s1.cols()));
    const long lam_mu1 = dim_cap(lambda, mu1, tol.rank_tol);
    const long lam_mu12 =
        dim_cap(frame_intersect(lambda, mu1, tol.rank_tol), mu2, tol.rank_tol);
    rep.add("l0-lower", static_cast<double>(s), ">=",
            static_cast<double>(lam_mu1 - lam_mu12 - dec1.s1.cols() + dec2.s1.cols()));
  }

  {
    const Mat lambda = random_lagrangian(dbl, rng.sub_seed());
    const Mat beta = random_lagrangian(sp, rng.sub_seed());
    const Mat ba1 = orthonormalize(product_frame(beta, bs.alpha1), tol.rank_tol);
    const long s = hormander_index(dbl, graph_id, lambda, a1t, ba1, tol).value;
    const Mat b_cap_a1 = frame_intersect(beta, bs.alpha1, tol.rank_tol);
    const Mat small = orthonormalize(product_frame(b_cap_a1, bs.alpha1), tol.rank_tol);
    const long rhs = dim_cap(lambda, a1t, tol.rank_tol) -
                     dim_cap(lambda, small, tol.rank_tol) +
                     static_cast<long>(b_cap_a1.cols()) - n;
    rep.add("beta-alpha-lower", static_cast<double>(s), ">=", static_cast<double>(rhs));
  }

  return rep;
}

}  // namespace sik
