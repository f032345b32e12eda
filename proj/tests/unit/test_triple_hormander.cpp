#include "doctest.h"

#include "sik/triple.hpp"
#include "sik/rng.hpp"

using namespace sik;

namespace {
const Tolerances tol;
}

TEST_CASE("triple index on the half-plane example") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  Mat a(2, 1), b(2, 1), c(2, 1);
  a << 1, 0;
  b << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  c << 0, 1;
  // The only Q eigenvalue is -1 and the pairwise intersections vanish.
  CHECK(triple_index(sp, a, b, c, tol).value == 0);
  CHECK(triple_index_via_delta(sp, a, b, c, tol).value == 0);
}

TEST_CASE("triple index repeat identities") {
  const SymplecticSpace sp = SymplecticSpace::standard(3);
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = random_lagrangian(sp, rng.sub_seed());
    const Mat b = random_lagrangian(sp, rng.sub_seed());
    CHECK(triple_index(sp, a, a, b, tol).value == 0);
    CHECK(triple_index(sp, b, a, a, tol).value == 0);
    const long cap = frame_intersect(a, b, tol.rank_tol).cols();
    CHECK(triple_index(sp, a, b, a, tol).value == sp.half_dim() - cap);
    // and never negative, with the dimension bound
    const Mat c = random_lagrangian(sp, rng.sub_seed());
    const long i = triple_index(sp, a, b, c, tol).value;
    CHECK(i >= 0);
    CHECK(i <= sp.half_dim());
  }
}

TEST_CASE("non-Lagrangian inputs are rejected") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const Mat a = random_lagrangian(sp, 3);
  const Mat small = Mat::Identity(4, 1);
  CHECK_THROWS_AS(triple_index(sp, a, a, small, tol), std::invalid_argument);
}

TEST_CASE("Hormander index degenerate quadruples") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(20);
  const Mat l = random_lagrangian(sp, rng.sub_seed());
  const Mat m1 = random_lagrangian(sp, rng.sub_seed());
  const Mat m2 = random_lagrangian(sp, rng.sub_seed());
  CHECK(hormander_index(sp, l, l, m1, m2, tol).value == 0);
  CHECK(hormander_index(sp, m1, m2, l, l, tol).value == 0);
  CHECK(hormander_via_paths(sp, l, l, m1, m2, tol).value == 0);
}

TEST_CASE("path method agrees with the algebraic routes") {
  Rng rng(30);
  for (int n : {1, 2, 3}) {
    const SymplecticSpace sp = SymplecticSpace::standard(n);
    for (int trial = 0; trial < 5; ++trial) {
      const Mat l1 = random_lagrangian(sp, rng.sub_seed());
      const Mat l2 = random_lagrangian(sp, rng.sub_seed());
      const Mat m1 = random_lagrangian(sp, rng.sub_seed());
      const Mat m2 = random_lagrangian(sp, rng.sub_seed());
      const long alg = hormander_index(sp, l1, l2, m1, m2, tol).value;
      CHECK(hormander_via_paths(sp, l1, l2, m1, m2, tol).value == alg);
    }
  }
}

TEST_CASE("antisymmetry in the second pair") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(40);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat l1 = random_lagrangian(sp, rng.sub_seed());
    const Mat l2 = random_lagrangian(sp, rng.sub_seed());
    const Mat m1 = random_lagrangian(sp, rng.sub_seed());
    const Mat m2 = random_lagrangian(sp, rng.sub_seed());
    CHECK(hormander_index(sp, l1, l2, m1, m2, tol).value ==
          -hormander_index(sp, l1, l2, m2, m1, tol).value);
  }
}

TEST_CASE("transversal witness probing") {
  const SymplecticSpace sp = SymplecticSpace::standard(3);
  Rng rng(50);
  const Mat a = random_lagrangian(sp, rng.sub_seed());
  const Mat b = random_lagrangian(sp, rng.sub_seed());
  const Mat c = random_lagrangian(sp, rng.sub_seed());
  const Mat d = find_transversal(sp, {a, b, c}, c, tol);
  CHECK(frame_intersect(d, a, tol.rank_tol).cols() == 0);
  CHECK(frame_intersect(d, b, tol.rank_tol).cols() == 0);
  CHECK(frame_intersect(d, c, tol.rank_tol).cols() == 0);
  CHECK(is_lagrangian(sp, d, tol));
}
