// iteration.hpp — path iteration, brake symmetry, elliptic height, and the
// audit battery for the iteration (in)equalities.

#pragma once

#include "sik/rng.hpp"
#include "sik/triple.hpp"

#include <cstdint>
#include <optional>

namespace sik {

struct AuditCheck {
  std::string name;
  double lhs = 0.0, rhs = 0.0;
  std::string relation;  // "<=", "==", ">="
  bool pass = false;
};

struct AuditReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<AuditCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, double lhs, std::string relation, double rhs);
};

// Endpoint maps, partial products and partial durations of an iteration.
struct IterationData {
  std::vector<Mat> endpoint;        // M_l
  std::vector<Mat> partial_product; // M~_l = M_l ... M_1
  std::vector<double> partial_time; // T_l
};
IterationData iteration_data(const std::vector<SymplecticPath>& parts);

// V = alpha1 + alpha2 with N = (-I on alpha1) + (I on alpha2); the default
// takes alpha1 = first n coordinates, alpha2 = last n.
struct BrakeStructure {
  Mat alpha1, alpha2;
  Mat n_map;
  static BrakeStructure standard(const SymplecticSpace& sp);
};

// k-th N-brake iteration of gamma in P_tau(V); the Poincare map at 2 tau is
// N gamma(tau)^{-1} N gamma(tau).
SymplecticPath brake_iterate(const SymplecticPath& gamma, int k, const BrakeStructure& bs);

// Total algebraic multiplicity of unit-circle eigenvalues.
long elliptic_height(const Mat& m, double circle_tol = 1e-8);

// gamma in L0(a, b) iff a cap g + b cap g = (a + b) cap g.
bool in_l0(const Mat& a, const Mat& b, const Mat& g, double rank_tol);

// For mu in L0(a1 x a1, a2 x a2): p_j(mu) = (aj x aj) cap mu and
// S_j(mu) = p_j(mu) cap Graph(I|aj); Graph(I) cap mu = S1 + S2.
struct L0Decomposition {
  Mat p1, p2, s1, s2;
};
L0Decomposition l0_decomposition(const SymplecticSpace& doubled, const Mat& mu,
                                 const BrakeStructure& bs, const Tolerances& tol);

// Inverse of the bijection p_j: given a subspace t of alpha_j x alpha_j,
// the unique mu in L0 with p_j(mu) = t is t + (t^omega cap other).
Mat l0_member_from_part(const SymplecticSpace& doubled, const Mat& part,
                        const Mat& other_factor, const Tolerances& tol);

// Periodic-boundary iteration inequalities for k >= 2 paths.
AuditReport audit_iteration_bounds(const SymplecticSpace& sp,
                                   const std::vector<SymplecticPath>& parts,
                                   const Tolerances& tol);

// gcd-form iteration inequalities for iterates of one path.
AuditReport audit_gcd_bounds(const SymplecticSpace& sp, const SymplecticPath& gamma,
                             int k1, int k2, const Tolerances& tol);

// Brake-symmetry identities and inequalities on one instance; aux_seed
// drives the auxiliary random data (W, alpha, L0 members).
AuditReport audit_brake_inequalities(const SymplecticSpace& sp, const SymplecticPath& gamma,
                                     int k, const BrakeStructure& bs, std::uint64_t aux_seed,
                                     const Tolerances& tol);

// Random piecewise-exponential path in P_tau(V) (exactly symplectic).
SymplecticPath random_symplectic_path(const SymplecticSpace& sp, std::uint64_t seed,
                                      double tau, int segments, double scale = 1.0);

}  // namespace sik
