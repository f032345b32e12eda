#include "doctest.h"

#include "sik/iteration.hpp"

using namespace sik;

namespace {
const Tolerances tol;

double path_distance(const SymplecticPath& a, const SymplecticPath& b, int samples = 40) {
  double worst = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = a.tau() * i / samples;
    worst = std::max(worst, (a.value(t) - b.value(t)).cwiseAbs().maxCoeff());
  }
  return worst;
}
}  // namespace

TEST_CASE("zero generator gives the constant identity path") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const SymplecticPath p = SymplecticPath::from_generator_field(
      sp, [&](double) { return Mat::Zero(4, 4); }, 2.0, 8);
  CHECK((p.value(1.3) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("path algebra") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const SymplecticPath g = random_symplectic_path(sp, 11, 1.0, 3, 1.0);
  REQUIRE(g.max_symplecticity_drift(sp) < 1e-12);

  SUBCASE("iterate(gamma, 1) is gamma") {
    CHECK(path_distance(iterate_path(g, 1), g) < 1e-13);
  }

  SUBCASE("concatenation endpoint is the ordered product") {
    const SymplecticPath h = random_symplectic_path(sp, 12, 0.5, 2, 1.0);
    const SymplecticPath joined = concat({g, h});
    CHECK(joined.tau() == doctest::Approx(1.5));
    const Mat want = h.endpoint() * g.endpoint();
    CHECK((joined.endpoint() - want).cwiseAbs().maxCoeff() < 1e-12);
    // continuity at the joint
    CHECK((joined.value(1.0 - 1e-9) - joined.value(1.0 + 1e-9)).cwiseAbs().maxCoeff() < 1e-6);
  }

  SUBCASE("head and tail recompose the path") {
    const SymplecticPath h1 = g.head(0.4);
    const SymplecticPath h2 = g.tail(0.4);
    CHECK(path_distance(concat({h1, h2}), g) < 1e-12);
  }

  SUBCASE("reversal") {
    const SymplecticPath r = g.reversed();
    CHECK((r.value(0.25) - g.value(0.75)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((r.value(0.0) - g.endpoint()).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("sample round trip through the piecewise log form") {
    std::vector<std::pair<double, Mat>> samples;
    for (int i = 0; i <= 8; ++i) samples.emplace_back(i / 8.0, g.value(i / 8.0));
    const SymplecticPath back = SymplecticPath::from_samples(1.0, samples);
    for (int i = 0; i <= 8; ++i)
      CHECK((back.value(i / 8.0) - g.value(i / 8.0)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("brake iteration") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const BrakeStructure bs = BrakeStructure::standard(sp);
  CHECK((bs.n_map * bs.n_map - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((bs.n_map.adjoint() * sp.J() * bs.n_map + sp.J()).cwiseAbs().maxCoeff() == 0.0);

  const SymplecticPath g = random_symplectic_path(sp, 21, 1.0, 2, 1.1);
  const Mat m = g.endpoint();

  SUBCASE("k = 1 is the path itself") {
    CHECK(path_distance(brake_iterate(g, 1, bs), g) < 1e-13);
  }

  SUBCASE("Poincare map at 2 tau") {
    const SymplecticPath b2 = brake_iterate(g, 2, bs);
    const Mat want = bs.n_map * m.partialPivLu().inverse() * bs.n_map * m;
    CHECK((b2.endpoint() - want).cwiseAbs().maxCoeff() < 1e-11);
    // continuity at the joint
    CHECK((b2.value(1.0 - 1e-9) - b2.value(1.0 + 1e-9)).cwiseAbs().maxCoeff() < 1e-6);
  }

  SUBCASE("even brake iterates are iterations of the second one") {
    const SymplecticPath b4 = brake_iterate(g, 4, bs);
    const SymplecticPath alt = iterate_path(brake_iterate(g, 2, bs), 2);
    CHECK(path_distance(b4, alt, 60) < 1e-10);
  }
}

TEST_CASE("elliptic height") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);

  SUBCASE("rotations lie on the circle") {
    CHECK(elliptic_height(matrix_exp(1.3 * sp.j_one())) == 4);
  }

  SUBCASE("hyperbolic maps have height zero") {
    const SymplecticSpace sp1 = SymplecticSpace::standard(1);
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = 0.5;
    REQUIRE(is_symplectic_map(sp1, m, 1e-12));
    CHECK(elliptic_height(m) == 0);
  }

  SUBCASE("parity matches the dimension") {
    // Off-circle eigenvalues pair up, so e(M) = 2n mod 2.
    Rng rng(8);
    for (int trial = 0; trial < 15; ++trial) {
      const Mat m = random_symplectic(sp, rng.sub_seed(), 1.5);
      CHECK((elliptic_height(m) - sp.dim()) % 2 == 0);
    }
  }
}

TEST_CASE("L0 membership and decomposition") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const SymplecticSpace dbl = sp.doubled();
  const BrakeStructure bs = BrakeStructure::standard(sp);
  const Mat a1t = orthonormalize(product_frame(bs.alpha1, bs.alpha1), tol.rank_tol);
  const Mat a2t = orthonormalize(product_frame(bs.alpha2, bs.alpha2), tol.rank_tol);
  const Mat diag = graph_frame(Mat::Identity(4, 4));

  SUBCASE("the diagonal belongs to L0(alpha1~, alpha2~)") {
    CHECK(in_l0(a1t, a2t, diag, tol.rank_tol));
    const L0Decomposition d = l0_decomposition(dbl, diag, bs, tol);
    CHECK(d.p1.cols() + d.p2.cols() == 4);
    CHECK(d.s1.cols() + d.s2.cols() == frame_intersect(diag, diag, tol.rank_tol).cols());
  }

  SUBCASE("mu = alpha1~ decomposes trivially") {
    const L0Decomposition d = l0_decomposition(dbl, a1t, bs, tol);
    CHECK(d.p1.cols() == 4);
    CHECK(d.p2.cols() == 0);
    CHECK(d.s1.cols() == 2);  // diagonal of alpha1
    CHECK(d.s2.cols() == 0);
  }

  SUBCASE("generic graphs are not members") {
    Rng rng(12);
    const Mat m = random_symplectic(sp, rng.sub_seed());
    CHECK_FALSE(in_l0(a1t, a2t, graph_frame(m), tol.rank_tol));
    CHECK_THROWS_AS(l0_decomposition(dbl, graph_frame(m), bs, tol), std::invalid_argument);
  }

  SUBCASE("members built from parts have complementary dimensions") {
    Rng rng(13);
    for (Eigen::Index d2 : {1, 2, 3}) {
      const Mat t2 = random_subspace_of(a2t, d2, rng, tol.rank_tol);
      const Mat mu = l0_member_from_part(dbl, t2, a1t, tol);
      CHECK(mu.cols() == 4);
      CHECK(is_lagrangian(dbl, mu, tol));
      const L0Decomposition d = l0_decomposition(dbl, mu, bs, tol);
      CHECK(d.p2.cols() == d2);
      CHECK(d.p1.cols() == 4 - d2);
      CHECK(same_span(d.p2, t2, tol.rank_tol));
    }
  }
}
