#include "sik/suites.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace sik {

namespace {

long dim_cap(const Mat& a, const Mat& b, double rank_tol) {
  return static_cast<long>(frame_intersect(a, b, rank_tol).cols());
}

long dim_cap3(const Mat& a, const Mat& b, const Mat& c, double rank_tol) {
  return static_cast<long>(
      frame_intersect(frame_intersect(a, b, rank_tol), c, rank_tol).cols());
}

}  // namespace

Mat lagrangian_through(const SymplecticSpace& sp, const Mat& isotropic, Rng& rng,
                       const Tolerances& tol) {
  const IsotropicReduction red = reduce_by_isotropic(sp, isotropic, tol);
  if (red.quotient.dim() == 0) return isotropic;
  const Mat inner = random_lagrangian(red.quotient, rng.sub_seed());
  Mat lifted(sp.dim(), isotropic.cols() + inner.cols());
  lifted << isotropic, red.section * inner;
  return orthonormalize(lifted, tol.rank_tol);
}

// ---------------------------------------------------------------------------
// section2: Maslov index machinery
// ---------------------------------------------------------------------------

AuditReport audit_maslov_instance(int n, std::uint64_t seed, const Tolerances& tol) {
  AuditReport rep;
  rep.seed = seed;
  rep.instance = "maslov-s" + std::to_string(seed) + "-n" + std::to_string(n);
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  Rng rng(seed * 1000003ULL + 17);

  // Analytic pair path: lambda(s) = e^{sA} lambda0 against a constant mu.
  const Mat lam0 = random_lagrangian(sp, rng.sub_seed());
  const Mat mu0 = random_lagrangian(sp, rng.sub_seed());
  const Mat ham = -sp.J().partialPivLu().solve(rng.hermitian(sp.dim(), 1.3));
  const double span = 2.5;
  auto lam_frame = [ham, lam0](double s) -> Mat { return matrix_exp(ham * s) * lam0; };
  const LagrangianPath lam{0.0, span, lam_frame, {0.0, span}, false};
  const LagrangianPath mu = constant_lagrangian(mu0, 0.0, span);

  const IndexReport plus = maslov_index(sp, lam, mu, MaslovSign::plus, tol);
  const IndexReport minus = maslov_index(sp, lam, mu, MaslovSign::minus, tol);
  const IndexReport cross = maslov_index_crossings(sp, lam, mu, tol);
  rep.add("dual-method", static_cast<double>(plus.value), "==",
          static_cast<double>(cross.value));

  const Mat la = qr_orthonormalize(lam.frame(0.0));
  const Mat lb = qr_orthonormalize(lam.frame(span));
  rep.add("endpoint-identity", static_cast<double>(plus.value - minus.value), "==",
          static_cast<double>(dim_cap(la, mu0, tol.rank_tol) - dim_cap(lb, mu0, tol.rank_tol)));

  // Same identity with a path that starts on mu (nontrivial endpoint kernel).
  auto lam2_frame = [ham, mu0](double s) -> Mat { return matrix_exp(ham * s) * mu0; };
  const LagrangianPath lam2{0.0, span, lam2_frame, {0.0, span}, false};
  const long p2 = maslov_index(sp, lam2, mu, MaslovSign::plus, tol).value;
  const long m2 = maslov_index(sp, lam2, mu, MaslovSign::minus, tol).value;
  const Mat l2b = qr_orthonormalize(lam2.frame(span));
  rep.add("endpoint-identity-degenerate", static_cast<double>(p2 - m2), "==",
          static_cast<double>(n - dim_cap(l2b, mu0, tol.rank_tol)));

  // Symplectic invariance.
  const Mat t_map = random_symplectic(sp, rng.sub_seed());
  const long moved =
      maslov_index(sp, transformed(lam, t_map),
                   constant_lagrangian(orthonormalize(t_map * mu0, tol.rank_tol), 0.0, span),
                   MaslovSign::plus, tol)
          .value;
  rep.add("symplectic-invariance", static_cast<double>(moved), "==",
          static_cast<double>(plus.value));

  // Antisymmetry under endpoint transversality.
  if (dim_cap(la, mu0, tol.rank_tol) == 0 && dim_cap(lb, mu0, tol.rank_tol) == 0) {
    const long rev = maslov_index(sp, mu, lam, MaslovSign::plus, tol).value;
    rep.add("pair-antisymmetry", static_cast<double>(rev), "==",
            static_cast<double>(-plus.value));
  }

  // Maslov-type index: reparametrization invariance and perturbation bounds.
  const SymplecticSpace dbl = sp.doubled();
  const SymplecticPath gamma = random_symplectic_path(sp, rng.sub_seed(), 1.0, 3, 1.4);
  const Mat w = random_lagrangian(dbl, rng.sub_seed());
  const long iw = maslov_type_index(sp, gamma, w, tol).value;

  const MatrixPath mp = as_matrix_path(gamma);
  auto warp = [](double t) { return std::pow(t, 1.6); };
  const long iw_warp =
      maslov_type_index(sp, reparametrized(mp, warp, 0.0, 1.0), w, tol).value;
  rep.add("reparametrization", static_cast<double>(iw_warp), "==", static_cast<double>(iw));

  {
    const Mat pert = -sp.J().partialPivLu().solve(rng.hermitian(sp.dim(), 1.0));
    const double eps = 1e-4;
    auto pv = mp.value;
    MatrixPath nudged{0.0, 1.0,
                      [pv, pert, eps](double t) -> Mat { return pv(t) * matrix_exp((eps * t) * pert); },
                      mp.knots};
    const long iw_tilde = maslov_type_index(sp, nudged, w, tol).value;
    const long nu_w = nullity_w(gamma.endpoint(), w, tol.rank_tol);
    rep.add("stability-lower", static_cast<double>(iw), "<=", static_cast<double>(iw_tilde));
    rep.add("stability-upper", static_cast<double>(iw_tilde), "<=",
            static_cast<double>(iw + nu_w));
  }

  // Multiplicativity under pointwise products.
  {
    const Mat base1 = random_symplectic(sp, rng.sub_seed());
    const Mat base3 = random_symplectic(sp, rng.sub_seed());
    const SymplecticPath g1 = SymplecticPath::single_generator(
        -sp.J().partialPivLu().solve(rng.hermitian(sp.dim(), 1.0)), 1.0, base1);
    const SymplecticPath g2 = random_symplectic_path(sp, rng.sub_seed(), 1.0, 2, 1.0)
                                  .left_multiplied(random_symplectic(sp, rng.sub_seed(), 0.7));
    const SymplecticPath g3 = SymplecticPath::single_generator(
        -sp.J().partialPivLu().solve(rng.hermitian(sp.dim(), 1.0)), 1.0, base3);
    const MatrixPath prod = pointwise_product(
        as_matrix_path(g3), pointwise_product(as_matrix_path(g2), as_matrix_path(g1)));
    const MatrixPath frozen = pointwise_product(
        as_matrix_path(g3),
        pointwise_product(MatrixPath::constant(g2.start(), 0.0, 1.0), as_matrix_path(g1)));
    Mat block = Mat::Zero(2 * sp.dim(), 2 * sp.dim());
    block.topLeftCorner(sp.dim(), sp.dim()) = g1.endpoint();
    block.bottomRightCorner(sp.dim(), sp.dim()) = g3.endpoint().partialPivLu().inverse();
    const Mat w_prime = orthonormalize(block * w, tol.rank_tol);
    const long lhs = maslov_type_index(sp, prod, w, tol).value;
    const long rhs = maslov_type_index(sp, g2, w_prime, tol).value +
                     maslov_type_index(sp, frozen, w, tol).value;
    rep.add("multiplicativity", static_cast<double>(lhs), "==", static_cast<double>(rhs));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// section3: the form Q, triple index, Hormander index
// ---------------------------------------------------------------------------

AuditReport audit_forms_instance(int n, std::uint64_t seed, const Tolerances& tol) {
  AuditReport rep;
  rep.seed = seed;
  rep.instance = "forms-s" + std::to_string(seed) + "-n" + std::to_string(n);
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  Rng rng(seed * 2000029ULL + 5);

  // Every third seed builds a degenerate triple sharing an isotropic core.
  Mat a, b, c;
  if (seed % 3 == 2 && n >= 2) {
    const Mat core = random_subspace_of(random_lagrangian(sp, rng.sub_seed()),
                                        1 + static_cast<Eigen::Index>(rng.uniform() * (n - 1)),
                                        rng, tol.rank_tol);
    a = lagrangian_through(sp, core, rng, tol);
    b = lagrangian_through(sp, core, rng, tol);
    c = (seed % 2 == 0) ? lagrangian_through(sp, core, rng, tol)
                        : random_lagrangian(sp, rng.sub_seed());
  } else {
    a = random_lagrangian(sp, rng.sub_seed());
    b = random_lagrangian(sp, rng.sub_seed());
    c = random_lagrangian(sp, rng.sub_seed());
  }

  // Antisymmetry on a shared domain basis.
  {
    const HermitianForm q = q_form(sp, a, b, c, tol);
    const Mat neg = q_form_matrix_on(sp, c, b, q.basis, tol);
    rep.add("q-antisymmetry", (q.matrix + neg).cwiseAbs().maxCoeff(), "<=",
            1e-8 * std::max(1.0, q.matrix.cwiseAbs().maxCoeff()));

    // Cyclic inertia.
    const InertiaTriple i1 = inertia_of(q, tol);
    const InertiaTriple i2 = inertia_of(q_form(sp, b, c, a, tol), tol);
    const InertiaTriple i3 = inertia_of(q_form(sp, c, a, b, tol), tol);
    rep.add("q-cyclic-plus", static_cast<double>(i1.plus), "==", static_cast<double>(i2.plus));
    rep.add("q-cyclic-minus", static_cast<double>(i1.minus), "==",
            static_cast<double>(i2.minus));
    rep.add("q-cyclic-plus-3", static_cast<double>(i1.plus), "==",
            static_cast<double>(i3.plus));
    rep.add("q-cyclic-minus-3", static_cast<double>(i1.minus), "==",
            static_cast<double>(i3.minus));

    // Kernel law for Lagrangian triples.
    const Mat ker = form_kernel(q, tol);
    const Mat expect = frame_sum(frame_intersect(a, b, tol.rank_tol),
                                 frame_intersect(a, c, tol.rank_tol), tol.rank_tol);
    rep.add("q-kernel-dim", static_cast<double>(ker.cols()), "==",
            static_cast<double>(expect.cols()));
    rep.add("q-kernel-span",
            same_span(orthonormalize(ker, tol.rank_tol), expect, tol.rank_tol) ? 1.0 : 0.0,
            "==", 1.0);

    // Dimension law with the equality criterion.
    const long lhs = dim_cap(a, b, tol.rank_tol) + dim_cap(a, c, tol.rank_tol) +
                     dim_cap(b, c, tol.rank_tol);
    const long rhs = n + 2 * dim_cap3(a, b, c, tol.rank_tol);
    rep.add("dimension-law", static_cast<double>(lhs), "<=", static_cast<double>(rhs));
    const bool zero_form = (i1.plus == 0 && i1.minus == 0);
    rep.add("dimension-law-equality", (lhs == rhs) ? 1.0 : 0.0, "==", zero_form ? 1.0 : 0.0);
  }

  // Reduction by an isotropic part of b: values and inertia pass to the quotient.
  {
    const Eigen::Index e_dim = 1 + static_cast<Eigen::Index>(rng.uniform() * (n - 1 + 0.999));
    const Mat eps = random_subspace_of(b, std::min<Eigen::Index>(e_dim, n), rng, tol.rank_tol);
    const IsotropicReduction red = reduce_by_isotropic(sp, eps, tol);
    if (red.quotient.dim() > 0) {
      const Mat pa = red.project(a, tol.rank_tol);
      const Mat pb = red.project(b, tol.rank_tol);
      const Mat pc = red.project(c, tol.rank_tol);
      const Mat dom_full = frame_intersect(a, frame_sum(b, c, tol.rank_tol), tol.rank_tol);
      const Mat dom = frame_intersect(dom_full, red.eps_omega, tol.rank_tol);
      if (dom.cols() > 0) {
        const Mat m_top = q_form_matrix_on(sp, b, c, dom, tol);
        const Mat dom_proj = red.section.adjoint() * dom;
        const Mat m_quot = q_form_matrix_on(red.quotient, pb, pc, dom_proj, tol);
        rep.add("q-reduction-values", (m_top - m_quot).cwiseAbs().maxCoeff(), "<=",
                1e-7 * std::max(1.0, m_top.cwiseAbs().maxCoeff()));
      }
      const InertiaTriple top = inertia_of(q_form_matrix_on(sp, b, c, dom, tol), tol.inertia_tol);
      const InertiaTriple quot = inertia_of(q_form(red.quotient, pa, pb, pc, tol), tol);
      rep.add("q-reduction-plus", static_cast<double>(top.plus), "==",
              static_cast<double>(quot.plus));
      rep.add("q-reduction-minus", static_cast<double>(top.minus), "==",
              static_cast<double>(quot.minus));
    }
  }

  // Triple index identities.
  rep.add("triple-repeat-aab", static_cast<double>(triple_index(sp, a, a, b, tol).value),
          "==", 0.0);
  rep.add("triple-repeat-baa", static_cast<double>(triple_index(sp, b, a, a, tol).value),
          "==", 0.0);
  rep.add("triple-repeat-aba", static_cast<double>(triple_index(sp, a, b, a, tol).value),
          "==", static_cast<double>(n - dim_cap(a, b, tol.rank_tol)));

  const long i_abc = triple_index(sp, a, b, c, tol).value;
  rep.add("triple-delta-agree", static_cast<double>(triple_index_via_delta(sp, a, b, c, tol).value),
          "==", static_cast<double>(i_abc));
  {
    // Independence of the transversal witness.
    const Mat d2 = find_transversal(sp, {a, b, c}, random_lagrangian(sp, rng.sub_seed()), tol);
    const long v = inertia_of(q_form(sp, a, d2, b, tol), tol).minus +
                   inertia_of(q_form(sp, b, d2, c, tol), tol).minus -
                   inertia_of(q_form(sp, a, d2, c, tol), tol).minus;
    rep.add("triple-delta-independent", static_cast<double>(v), "==",
            static_cast<double>(i_abc));
  }

  // Hormander quadruple identities.
  const Mat l1 = a;
  const Mat l2 = random_lagrangian(sp, rng.sub_seed());
  const Mat m1 = b;
  const Mat m2 = c;
  const Mat m3 = random_lagrangian(sp, rng.sub_seed());
  const long s12 = hormander_index(sp, l1, l2, m1, m2, tol).value;
  rep.add("s-adjacent",
          static_cast<double>(hormander_index(sp, l1, l2, m1, m3, tol).value), "==",
          static_cast<double>(s12 + hormander_index(sp, l1, l2, m2, m3, tol).value));
  rep.add("s-opposite",
          static_cast<double>(hormander_index(sp, l1, l2, m2, m1, tol).value), "==",
          static_cast<double>(-s12));
  {
    long alt = 0;
    const Mat* ls[2] = {&l1, &l2};
    const Mat* ms[2] = {&m1, &m2};
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const long d = dim_cap(*ls[j], *ms[k], tol.rank_tol);
        alt += ((j + k) % 2 == 0 ? -1 : 1) * d;  // (-1)^{j+k+1} with 1-based j,k
      }
    rep.add("s-front-back",
            static_cast<double>(s12 + hormander_index(sp, m1, m2, l1, l2, tol).value), "==",
            static_cast<double>(alt));
  }
  rep.add("hormander-paths-agree",
          static_cast<double>(hormander_via_paths(sp, l1, l2, m1, m2, tol).value), "==",
          static_cast<double>(s12));

  // Transversal quadruples reduce to a difference of negative inertias.
  if (dim_cap(l1, m1, tol.rank_tol) == 0 && dim_cap(l1, m2, tol.rank_tol) == 0 &&
      dim_cap(l2, m1, tol.rank_tol) == 0 && dim_cap(l2, m2, tol.rank_tol) == 0) {
    const long v = inertia_of(q_form(sp, l1, l2, m1, tol), tol).minus -
                   inertia_of(q_form(sp, l1, l2, m2, tol), tol).minus;
    rep.add("s-transversal-form", static_cast<double>(s12), "==", static_cast<double>(v));
  }

  // Concrete path relations (two-repeat corollary).
  {
    const Mat la = l1, lb = l2, mu = m3;
    const LagrangianPath lam = unitary_geodesic(sp, la, lb);
    const long s_aa = hormander_index(sp, la, lb, la, mu, tol).value;
    const long s_bb = hormander_index(sp, la, lb, lb, mu, tol).value;
    const long i_bam = triple_index(sp, lb, la, mu, tol).value;
    const long i_abm = triple_index(sp, la, lb, mu, tol).value;
    rep.add("s-repeat-first", static_cast<double>(s_aa), "==", static_cast<double>(-i_bam));
    rep.add("s-repeat-first-upper", static_cast<double>(s_aa), "<=",
            static_cast<double>(dim_cap3(la, lb, mu, tol.rank_tol) -
                                dim_cap(lb, mu, tol.rank_tol)));
    rep.add("s-repeat-first-lower", static_cast<double>(s_aa), ">=",
            static_cast<double>(dim_cap(la, lb, tol.rank_tol) + dim_cap(la, mu, tol.rank_tol) -
                                dim_cap3(la, lb, mu, tol.rank_tol) - n));
    rep.add("s-repeat-last", static_cast<double>(s_bb), "==", static_cast<double>(i_abm));
    rep.add("s-repeat-last-sign", static_cast<double>(s_bb), ">=", 0.0);

    const long mas_mu =
        maslov_index(sp, lam, constant_lagrangian(mu, 0.0, 1.0), MaslovSign::plus, tol).value;
    const long mas_a =
        maslov_index(sp, lam, constant_lagrangian(la, 0.0, 1.0), MaslovSign::plus, tol).value;
    const long mas_b =
        maslov_index(sp, lam, constant_lagrangian(lb, 0.0, 1.0), MaslovSign::plus, tol).value;
    rep.add("mas-sandwich-lower", static_cast<double>(mas_b), "<=",
            static_cast<double>(mas_mu));
    rep.add("mas-sandwich-upper", static_cast<double>(mas_mu), "<=",
            static_cast<double>(mas_a));

    // Partially transversal witness.
    const Mat alpha = find_transversal(sp, {la, lb}, random_lagrangian(sp, rng.sub_seed()), tol);
    rep.add("s-partial-transversal",
            static_cast<double>(hormander_index(sp, alpha, la, la, lb, tol).value), "==",
            static_cast<double>(inertia_of(q_form(sp, la, alpha, lb, tol), tol).minus));

    // Rotating the second pair by a small common e^{Js} preserves s.
    const double small = 1e-3;
    const Mat rm1 = orthonormalize(sp.rotation(small) * m1, tol.rank_tol);
    const Mat rm2 = orthonormalize(sp.rotation(small) * m2, tol.rank_tol);
    rep.add("s-small-rotation",
            static_cast<double>(hormander_index(sp, l1, l2, rm1, rm2, tol).value), "==",
            static_cast<double>(s12));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// section4: iteration and brake audits
// ---------------------------------------------------------------------------

AuditReport audit_iteration_instance(int n, std::uint64_t seed, const Tolerances& tol) {
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  Rng rng(seed * 3000017ULL + 11);
  const double scale = 0.8 + 0.8 * rng.uniform();

  std::vector<SymplecticPath> parts;
  for (int l = 0; l < 3; ++l)
    parts.push_back(random_symplectic_path(sp, rng.sub_seed(), 1.0, 2, scale));

  AuditReport rep = audit_iteration_bounds(sp, {parts[0], parts[1]}, tol);
  rep.seed = seed;
  rep.instance = "iter-s" + std::to_string(seed) + "-n" + std::to_string(n);

  {
    AuditReport three = audit_iteration_bounds(sp, parts, tol);
    for (auto& c : three.checks) {
      c.name = "k3-" + c.name;
      rep.checks.push_back(std::move(c));
    }
  }

  const SymplecticPath gamma = parts[0];
  for (auto [k1, k2] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{2, 4}}) {
    AuditReport g = audit_gcd_bounds(sp, gamma, k1, k2, tol);
    for (auto& c : g.checks) {
      c.name = "k" + std::to_string(k1) + std::to_string(k2) + "-" + c.name;
      rep.checks.push_back(std::move(c));
    }
  }

  const int brake_k = 3 + static_cast<int>(seed % 3);
  AuditReport brake = audit_brake_inequalities(sp, gamma, brake_k,
                                               BrakeStructure::standard(sp),
                                               rng.sub_seed(), tol);
  for (auto& c : brake.checks) rep.checks.push_back(std::move(c));
  return rep;
}

// ---------------------------------------------------------------------------
// section5: flow indices
// ---------------------------------------------------------------------------

AuditReport audit_flow_instance(int n, std::uint64_t seed, const Tolerances& tol) {
  AuditReport rep;
  rep.seed = seed;
  rep.instance = "flow-s" + std::to_string(seed) + "-n" + std::to_string(n);
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  Rng rng(seed * 4000037ULL + 3);

  FlowSpec flow;
  flow.velocity = Eigen::VectorXd(2);
  flow.velocity << 1.0, std::sqrt(2.0);

  FieldSpec field;
  {
    FieldTerm t0;
    t0.wave = Eigen::VectorXi::Zero(2);
    t0.coeff = rng.hermitian(sp.dim(), 0.5);
    field.terms.push_back(t0);
    FieldTerm t1;
    t1.wave = Eigen::VectorXi(2);
    t1.wave << 1, 0;
    t1.coeff = rng.hermitian(sp.dim(), 0.4);
    field.terms.push_back(t1);
    FieldTerm t2;
    t2.wave = Eigen::VectorXi(2);
    t2.wave << 0, 1;
    t2.is_sin = true;
    t2.coeff = rng.hermitian(sp.dim(), 0.4);
    field.terms.push_back(t2);
  }

  Eigen::VectorXd xi(2);
  xi << rng.uniform(), rng.uniform();
  const double step = default_step(field, flow);

  AuditReport sub = subadditivity_audit(
      sp, flow, field, xi, {{1.0, 2.0}, {0.5, 1.5}, {2.0, 0.25}}, step, tol);
  for (auto& c : sub.checks) rep.checks.push_back(std::move(c));

  FieldSpec upper = field;
  FieldTerm shift;
  shift.wave = Eigen::VectorXi::Zero(2);
  shift.coeff = (0.2 + rng.uniform()) * Mat::Identity(sp.dim(), sp.dim());
  upper.terms.push_back(shift);
  AuditReport mono = monotonicity_audit(sp, flow, field, upper, xi, 3.0, step, tol);
  for (auto& c : mono.checks) rep.checks.push_back(std::move(c));

  // A-priori band at a fixed horizon.
  {
    const double tau = 4.0;
    const double c = field.certified_bound(sp);
    const long i_tau = index_along_flow(sp, flow, field, xi, tau, step, tol);
    const double x = c * tau / kTwoPi;
    rep.add("band-lower", -static_cast<double>(sp.dim()) * std::floor(x), "<=",
            static_cast<double>(i_tau));
    rep.add("band-upper", static_cast<double>(i_tau), "<=",
            static_cast<double>(sp.dim()) * static_cast<double>(e_ceil(x, tol.int_tol)));
  }

  // Halving the integrator step must not move any reported integer.
  {
    const double tau = 2.0;
    const long coarse = index_along_flow(sp, flow, field, xi, tau, step, tol);
    const long fine = index_along_flow(sp, flow, field, xi, tau, step / 2, tol);
    rep.add("grid-halving", static_cast<double>(coarse), "==", static_cast<double>(fine));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

int thread_count_from_env(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SIK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<AuditReport> run_suite(const std::string& suite, int seeds, int n,
                                   const Tolerances& tol, int threads) {
  AuditReport (*instance)(int, std::uint64_t, const Tolerances&) = nullptr;
  if (suite == "section2") instance = audit_maslov_instance;
  else if (suite == "section3") instance = audit_forms_instance;
  else if (suite == "section4") instance = audit_iteration_instance;
  else if (suite == "section5") instance = audit_flow_instance;
  else throw std::invalid_argument("unknown suite: " + suite);

  std::vector<AuditReport> out(static_cast<std::size_t>(seeds));
  auto run_one = [&](int s) {
    try {
      out[s] = instance(n, static_cast<std::uint64_t>(s), tol);
    } catch (const std::exception& e) {
      AuditReport fail;
      fail.seed = static_cast<std::uint64_t>(s);
      fail.instance = suite + "-s" + std::to_string(s) + "-error";
      fail.add(std::string("exception: ") + e.what(), 1.0, "==", 0.0);
      out[s] = std::move(fail);
    }
  };
  const int workers = std::min(thread_count_from_env(threads), std::max(seeds, 1));
  if (workers <= 1) {
    for (int s = 0; s < seeds; ++s) run_one(s);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int s = next.fetch_add(1); s < seeds; s = next.fetch_add(1)) run_one(s);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace sik
