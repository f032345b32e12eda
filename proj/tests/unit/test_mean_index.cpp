#include "doctest.h"

#include "sik/mean_index.hpp"
#include "sik/rng.hpp"

using namespace sik;

namespace {
const Tolerances tol;

FieldSpec constant_field(const Mat& h) {
  FieldSpec f;
  FieldTerm t;
  t.wave = Eigen::VectorXi::Zero(2);
  t.coeff = h;
  f.terms.push_back(t);
  return f;
}
}  // namespace

TEST_CASE("torus flow") {
  FlowSpec flow;
  flow.velocity = Eigen::VectorXd(2);
  flow.velocity << 0.25, 0.5;
  Eigen::VectorXd xi(2);
  xi << 0.9, 0.9;
  const Eigen::VectorXd moved = flow.advance(xi, 1.0);
  CHECK(moved(0) == doctest::Approx(0.15));
  CHECK(moved(1) == doctest::Approx(0.4));
  // group law
  const Eigen::VectorXd a = flow.advance(flow.advance(xi, 0.7), 0.3);
  const Eigen::VectorXd b = flow.advance(xi, 1.0);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fundamental solution of the zero field is the identity") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const SymplecticPath p =
      fundamental_solution(sp, [&](double) { return Mat::Zero(4, 4); }, 2.0, 1.0 / 8);
  CHECK((p.value(1.7) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("constant fields integrate to the matrix exponential") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  Rng rng(7);
  const Mat b = rng.hermitian(4, 0.9);
  const double tau = 2.0;
  const SymplecticPath p = fundamental_solution(sp, [&](double) { return b; }, tau, 1.0 / 32);
  const Mat exact = matrix_exp(-sp.J().partialPivLu().solve(b) * tau);
  CHECK((p.endpoint() - exact).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(p.max_symplecticity_drift(sp) < 1e-10);
}

TEST_CASE("the j_sqrt field generates the rotation path") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const double c = 1.3;
  const SymplecticPath p =
      fundamental_solution(sp, [&](double) { return Mat(c * sp.j_sqrt()); }, 1.0, 1.0 / 16);
  CHECK((p.endpoint() - matrix_exp(c * sp.j_one())).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("index along the flow") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  const int m = sp.dim();
  FlowSpec flow;
  flow.velocity = Eigen::VectorXd::Ones(2);
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(2);

  SUBCASE("tau zero gives zero") {
    const FieldSpec f = constant_field(sp.j_sqrt());
    CHECK(index_along_flow(sp, flow, f, xi, 0.0, 1.0 / 16, tol) == 0);
  }

  SUBCASE("constant rotation field has the closed form") {
    const double c = 1.0;
    const FieldSpec f = constant_field(c * sp.j_sqrt());
    for (double tau : {1.0, 4.0, 13.0}) {
      CHECK(index_along_flow(sp, flow, f, xi, tau, 1.0 / 16, tol) ==
            m * e_ceil(c * tau / kTwoPi, tol.int_tol));
    }
  }

  SUBCASE("a-priori band") {
    Rng rng(3);
    FieldSpec f = constant_field(rng.hermitian(4, 0.7));
    const double c = f.certified_bound(sp);
    const double tau = 6.0;
    const long idx = index_along_flow(sp, flow, f, xi, tau, 1.0 / 16, tol);
    CHECK(idx >= -m * std::floor(c * tau / kTwoPi));
    CHECK(idx <= m * e_ceil(c * tau / kTwoPi, tol.int_tol));
  }
}

TEST_CASE("mean index of the zero field vanishes") {
  const SymplecticSpace sp = SymplecticSpace::standard(2);
  FlowSpec flow;
  flow.velocity = Eigen::VectorXd::Ones(2);
  const FieldSpec f = constant_field(Mat::Zero(4, 4));
  const MeanIndexReport rep = mean_index_estimate(sp, flow, f, Eigen::VectorXd::Zero(2),
                                                  {4, 8, 16}, 1.0 / 16, tol);
  CHECK(rep.f_hat == 0.0);
  for (const auto& row : rep.rows) CHECK(row.i_tau == 0);
}

TEST_CASE("subadditivity audit with a degenerate pair") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  FlowSpec flow;
  flow.velocity = Eigen::VectorXd::Ones(2);
  Rng rng(5);
  FieldSpec f = constant_field(rng.hermitian(2, 0.8));
  Eigen::VectorXd xi(2);
  xi << 0.2, 0.4;
  // s = 0 makes every inequality an equality.
  const AuditReport rep =
      subadditivity_audit(sp, flow, f, xi, {{0.0, 2.0}}, 1.0 / 16, tol);
  for (const auto& c : rep.checks) CHECK(c.pass);
}

TEST_CASE("monotonicity audit") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  FlowSpec flow;
  flow.velocity = Eigen::VectorXd::Ones(2);
  Rng rng(6);
  const FieldSpec b0 = constant_field(rng.hermitian(2, 0.8));
  FieldSpec b1 = b0;
  b1.terms[0].coeff += 0.5 * Mat::Identity(2, 2);

  SUBCASE("ordered fields give ordered indices") {
    const AuditReport rep =
        monotonicity_audit(sp, flow, b0, b1, Eigen::VectorXd::Zero(2), 3.0, 1.0 / 16, tol);
    CHECK(rep.all_pass());
  }

  SUBCASE("equal fields give equal indices") {
    const AuditReport rep =
        monotonicity_audit(sp, flow, b0, b0, Eigen::VectorXd::Zero(2), 2.0, 1.0 / 16, tol);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].lhs == rep.checks[0].rhs);
  }

  SUBCASE("violated ordering is rejected") {
    CHECK_THROWS_AS(
        monotonicity_audit(sp, flow, b1, b0, Eigen::VectorXd::Zero(2), 2.0, 1.0 / 16, tol),
        std::invalid_argument);
  }
}

TEST_CASE("the extreme fields reproduce the band endpoints") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const int m = sp.dim();
  FlowSpec flow;
  flow.velocity = Eigen::VectorXd::Ones(2);
  const double c = 1.1, tau = 5.0;
  const FieldSpec lo = constant_field(-c * sp.j_sqrt());
  const FieldSpec hi = constant_field(c * sp.j_sqrt());
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(2);
  const long i_lo = index_along_flow(sp, flow, lo, xi, tau, 1.0 / 16, tol);
  const long i_hi = index_along_flow(sp, flow, hi, xi, tau, 1.0 / 16, tol);
  CHECK(i_lo == -m * static_cast<long>(std::floor(c * tau / kTwoPi)));
  CHECK(i_hi == m * e_ceil(c * tau / kTwoPi, tol.int_tol));
}

TEST_CASE("grid alignment is enforced") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  CHECK_THROWS_AS(fundamental_solution(sp, [&](double) { return Mat::Zero(2, 2); },
                                       1.0, 0.3),
                  std::invalid_argument);
}
