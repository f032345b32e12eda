#include "doctest.h"

#include "sik/maslov.hpp"
#include "sik/iteration.hpp"

using namespace sik;

namespace {
const Tolerances tol;
}

TEST_CASE("integer rounding E and floor") {
  CHECK(e_ceil(2.0, tol.int_tol) == 2);
  CHECK(e_ceil(0.5, tol.int_tol) == 1);
  CHECK(e_ceil(-0.3, tol.int_tol) == 0);
  CHECK(e_ceil(3.0 - 1e-9, tol.int_tol) == 3);   // snapped
  CHECK(e_ceil(3.0 + 1e-9, tol.int_tol) == 3);   // snapped
  CHECK(e_floor(0.5, tol.int_tol) == 0);
  CHECK(e_floor(-0.3, tol.int_tol) == -1);
  CHECK(e_floor(2.0 + 1e-9, tol.int_tol) == 2);
}

TEST_CASE("constant pairs have index zero") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const Mat a = random_lagrangian(sp, 1);
  const Mat b = random_lagrangian(sp, 2);
  const IndexReport rep = maslov_index(sp, constant_lagrangian(a, 0, 1),
                                       constant_lagrangian(b, 0, 1), MaslovSign::plus, tol);
  CHECK(rep.value == 0);
}

TEST_CASE("eigenphase tracker follows a full turn") {
  // W(s) = e^{is} I has two phases moving together through the cut.
  auto w = [](double s) -> Mat { return std::exp(cd(0, s)) * Mat::Identity(2, 2); };
  const EigenphaseTrace trace = track_unitary_eigenphases(w, 0.0, 3 * kPi, {0.0, 3 * kPi});
  CHECK(trace.complete);
  CHECK(trace.end()(0) - trace.start()(0) == doctest::Approx(3 * kPi).epsilon(1e-9));
  CHECK(trace.end()(1) - trace.start()(1) == doctest::Approx(3 * kPi).epsilon(1e-9));
}

TEST_CASE("rotation paths against the diagonal") {
  // i_1(e^{cJ1 t}) on [0, tau] equals m E(c tau / 2 pi).
  for (int n : {1, 2}) {
    const SymplecticSpace sp = SymplecticSpace::standard(n);
    const int m = sp.dim();
    for (double c : {-1.0, 1.0, 2.5}) {
      for (double tau : {0.5, 1.0, 3.0}) {
        const SymplecticPath g = SymplecticPath::single_generator(c * sp.j_one(), tau);
        CHECK(i_one(sp, g, tol) == m * e_ceil(c * tau / kTwoPi, tol.int_tol));
      }
    }
  }
}

TEST_CASE("plus and minus differ by the endpoint kernels") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(33);
  for (int trial = 0; trial < 6; ++trial) {
    const Mat mu0 = random_lagrangian(sp, rng.sub_seed());
    const Mat ham = -sp.J().partialPivLu().solve(rng.hermitian(sp.dim(), 1.4));
    auto frame = [ham, mu0](double s) -> Mat { return matrix_exp(ham * s) * mu0; };
    const LagrangianPath lam{0.0, 2.0, frame, {0.0, 2.0}, false};
    const LagrangianPath mu = constant_lagrangian(mu0, 0.0, 2.0);
    const long plus = maslov_index(sp, lam, mu, MaslovSign::plus, tol).value;
    const long minus = maslov_index(sp, lam, mu, MaslovSign::minus, tol).value;
    const Mat end = qr_orthonormalize(lam.frame(2.0));
    const long d_a = sp.half_dim();  // lam(0) = mu
    const long d_b = frame_intersect(end, mu0, tol.rank_tol).cols();
    CHECK(plus - minus == d_a - d_b);
  }
}

TEST_CASE("crossing method") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const Mat mu0 = random_lagrangian(sp, 3);

  SUBCASE("no crossings means zero") {
    // A short rotation window that stays away from mu.
    const LagrangianPath lam = rotation_path(sp, mu0, 0.3, 0.8);
    const LagrangianPath mu = constant_lagrangian(mu0, 0.3, 0.8);
    const IndexReport rep = maslov_index_crossings(sp, lam, mu, tol);
    CHECK(rep.value == 0);
    CHECK(rep.crossing_times.empty());
  }

  SUBCASE("one interior positive crossing counts once") {
    // e^{Js} mu crosses mu at s = 0 with a positive definite form.
    const LagrangianPath lam = rotation_path(sp, mu0, -0.4, 0.6);
    const LagrangianPath mu = constant_lagrangian(mu0, -0.4, 0.6);
    const IndexReport rep = maslov_index_crossings(sp, lam, mu, tol);
    CHECK(rep.value == 1);
    REQUIRE(rep.crossing_times.size() == 1);
    CHECK(rep.crossing_times[0] == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(rep.crossing_signs[0] == 1);
    // and it agrees with the eigenphase method
    CHECK(maslov_index(sp, lam, mu, MaslovSign::plus, tol).value == 1);
  }
}

TEST_CASE("maslov-type index basics") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const SymplecticSpace dbl = sp.doubled();
  Rng rng(44);

  SUBCASE("constant identity path gives zero for every W") {
    const SymplecticPath id = SymplecticPath::identity(4, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
      const Mat w = random_lagrangian(dbl, rng.sub_seed());
      CHECK(maslov_type_index(sp, id, w, tol).value == 0);
    }
  }

  SUBCASE("nullities at the endpoint") {
    const Mat full_turn = matrix_exp(kTwoPi * sp.j_one());
    CHECK(nullity_one(full_turn, tol.rank_tol) == 4);
    const Mat m = random_symplectic(sp, 5);
    CHECK(nullity_one(m, tol.rank_tol) == 0);  // generic
    CHECK(nullity_w(m, graph_frame(m), tol.rank_tol) == 4);
    CHECK(nullity_p(m, m, tol.rank_tol) == 4);
  }

  SUBCASE("W given as a graph") {
    const SymplecticPath g = random_symplectic_path(sp, 71, 1.0, 2, 1.0);
    const Mat p = g.endpoint();
    // nu_W picks up the full intersection when W is the endpoint graph.
    CHECK(nullity_w(g.endpoint(), graph_frame(p), tol.rank_tol) == 4);
  }
}

TEST_CASE("non-Lagrangian W is rejected") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const SymplecticPath id = SymplecticPath::identity(2, 1.0);
  const Mat not_lagrangian = Mat::Identity(4, 2);  // wrong annihilator
  CHECK_THROWS_AS(maslov_type_index(sp, id, not_lagrangian, tol), std::invalid_argument);
}
