#include "doctest.h"

#include "sik/hermitian.hpp"
#include "sik/iteration.hpp"

using namespace sik;

namespace {
const Tolerances tol;
}

TEST_CASE("inertia of diagonal and zero forms") {
  Mat d = Mat::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = -1;
  const InertiaTriple it = inertia_of(d, tol.inertia_tol);
  CHECK(it.plus == 1);
  CHECK(it.zero == 1);
  CHECK(it.minus == 1);

  const InertiaTriple z = inertia_of(Mat::Zero(4, 4), tol.inertia_tol);
  CHECK(z.zero == 4);
  CHECK(z.plus == 0);
  CHECK(z.minus == 0);
}

TEST_CASE("Sylvester congruence invariance") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat h = rng.hermitian(4, 1.0);
    Mat a = rng.cgaussian(4, 4);
    while (std::abs(a.determinant()) < 1e-3) a = rng.cgaussian(4, 4);
    const Mat congruent = a.adjoint() * h * a;
    CHECK(inertia_of(congruent, tol.inertia_tol) == inertia_of(h, tol.inertia_tol));
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  Mat bad = Mat::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(inertia_of(bad, tol.inertia_tol), std::invalid_argument);
}

TEST_CASE("Q form on the half-plane example") {
  // alpha = span(1,0), beta = span(1,1), gamma = span(0,1) in C^2:
  // the decomposition of x = (1,0) is y = -(1,1), z = (0,-1), and the
  // single matrix entry is omega(x, y) = -1.
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  Mat a(2, 1), b(2, 1), c(2, 1);
  a << 1, 0;
  b << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  c << 0, 1;
  const HermitianForm q = q_form(sp, a, b, c, tol);
  REQUIRE(q.dim() == 1);
  CHECK(q.matrix(0, 0).real() == doctest::Approx(-1.0));
  CHECK(q.matrix(0, 0).imag() == doctest::Approx(0.0));
}

TEST_CASE("Q vanishes when the last two arguments coincide") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(6);
  const Mat a = random_lagrangian(sp, rng.sub_seed());
  const Mat b = random_lagrangian(sp, rng.sub_seed());
  const HermitianForm q = q_form(sp, a, b, b, tol);
  CHECK(q.dim() == frame_intersect(a, b, tol.rank_tol).cols());
  if (q.dim() > 0) CHECK(q.matrix.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("kernel of Q spans the pairwise intersections") {
  const SymplecticSpace sp = SymplecticSpace::standard(3);
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = random_lagrangian(sp, rng.sub_seed());
    const Mat b = random_lagrangian(sp, rng.sub_seed());
    const Mat c = random_lagrangian(sp, rng.sub_seed());
    const HermitianForm q = q_form(sp, a, b, c, tol);
    const Mat ker = form_kernel(q, tol);
    const Mat want = frame_sum(frame_intersect(a, b, tol.rank_tol),
                               frame_intersect(a, c, tol.rank_tol), tol.rank_tol);
    CHECK(ker.cols() == want.cols());
    CHECK(same_span(orthonormalize(ker, tol.rank_tol), want, tol.rank_tol));
  }
}

TEST_CASE("decomposition residual is policed") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  Mat a(2, 1), b(2, 1);
  a << 1, 0;
  b << 0, 1;
  // Domain vector outside beta + gamma cannot be decomposed.
  CHECK_THROWS_AS(q_form_matrix_on(sp, b, b, a, tol), std::invalid_argument);
}

TEST_CASE("derivative form of a constant path vanishes") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const Mat lam = random_lagrangian(sp, 77);
  const HermitianForm q = q_derivative_form(sp, constant_lagrangian(lam, 0, 1), 0.5, tol);
  CHECK(q.matrix.cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("rotation paths have positive definite derivative form") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    const Mat lam = random_lagrangian(sp, rng.sub_seed());
    const LagrangianPath path = rotation_path(sp, lam, -0.1, 0.1);
    const HermitianForm q = q_derivative_form(sp, path, 0.0, tol);
    const InertiaTriple it = inertia_of(q, tol);
    CHECK(it.plus == sp.half_dim());
    CHECK(it.zero == 0);
    CHECK(it.minus == 0);
  }
}

TEST_CASE("graph tangent form matches the finite difference") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const SymplecticSpace dbl = sp.doubled();
  Rng rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    const SymplecticPath g = random_symplectic_path(sp, rng.sub_seed(), 1.0, 1, 1.2);
    const double t = 0.37;
    const Mat gamma = g.value(t);
    const Mat gamma_dot = g.segments().front().gen * gamma;

    // Analytic: omega(-gamma^{-1} gamma_dot u, v) on graph vectors, with the
    // top components of an orthonormal graph frame as the domain.
    const Mat frame = qr_orthonormalize(graph_path(g).frame(t));
    const Mat top = frame.topRows(sp.dim());
    const Mat analytic = graph_tangent_matrix_on(sp, gamma, gamma_dot, top);
    const Mat numeric = q_derivative_matrix_on(dbl, graph_path(g), t, frame, 1e-5);
    CHECK((analytic - numeric).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("crossing forms") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(91);
  const Mat lam = random_lagrangian(sp, rng.sub_seed());
  const LagrangianPath moving = rotation_path(sp, lam, -0.2, 0.2);

  SUBCASE("identical paths give the zero form") {
    const HermitianForm g = crossing_form(sp, moving, moving, 0.05, tol);
    CHECK(g.dim() == 2);
    CHECK(g.matrix.cwiseAbs().maxCoeff() < 1e-8);
  }

  SUBCASE("against a constant the second term drops") {
    const LagrangianPath fixed = constant_lagrangian(lam, -0.2, 0.2);
    const HermitianForm g = crossing_form(sp, moving, fixed, 0.0, tol);
    REQUIRE(g.dim() == 2);
    const Mat q = q_derivative_matrix_on(sp, moving, 0.0, g.basis, 1e-5);
    CHECK((g.matrix - q).cwiseAbs().maxCoeff() < 1e-9);
  }
}
