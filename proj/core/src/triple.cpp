#include "sik/triple.hpp"

#include <stdexcept>

namespace sik {

namespace {

void require_lagrangian(const SymplecticSpace& sp, const Mat& f, const Tolerances& tol,
                        const char* who) {
  if (!is_lagrangian(sp, f, tol))
    throw std::invalid_argument(std::string(who) + ": input is not Lagrangian");
}

long dim_cap(const Mat& a, const Mat& b, double rank_tol) {
  return static_cast<long>(frame_intersect(a, b, rank_tol).cols());
}

}  // namespace

IndexReport triple_index(const SymplecticSpace& sp, const Mat& a, const Mat& b,
                         const Mat& c, const Tolerances& tol) {
  require_lagrangian(sp, a, tol, "triple_index");
  require_lagrangian(sp, b, tol, "triple_index");
  require_lagrangian(sp, c, tol, "triple_index");
  const InertiaTriple q = inertia_of(q_form(sp, a, b, c, tol), tol);
  const long ac = dim_cap(a, c, tol.rank_tol);
  const long abc = static_cast<long>(
      frame_intersect(frame_intersect(a, b, tol.rank_tol), c, tol.rank_tol).cols());
  IndexReport rep;
  rep.method = "triple-inertia";
  rep.value = q.plus + ac - abc;
  return rep;
}

Mat find_transversal(const SymplecticSpace& sp, const std::vector<Mat>& avoid,
                     const Mat& base, const Tolerances& tol) {
  for (double s : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const Mat cand = orthonormalize(sp.rotation(s) * base, tol.rank_tol);
    bool ok = true;
    for (const Mat& f : avoid)
      if (dim_cap(cand, f, tol.rank_tol) > 0) { ok = false; break; }
    if (ok) return cand;
  }
  throw std::runtime_error("find_transversal: probe budget exhausted");
}

IndexReport triple_index_via_delta(const SymplecticSpace& sp, const Mat& a, const Mat& b,
                                   const Mat& c, const Tolerances& tol) {
  require_lagrangian(sp, a, tol, "triple_index_via_delta");
  require_lagrangian(sp, b, tol, "triple_index_via_delta");
  require_lagrangian(sp, c, tol, "triple_index_via_delta");
  const Mat d = find_transversal(sp, {a, b, c}, c, tol);
  const InertiaTriple qab = inertia_of(q_form(sp, a, d, b, tol), tol);
  const InertiaTriple qbc = inertia_of(q_form(sp, b, d, c, tol), tol);
  const InertiaTriple qac = inertia_of(q_form(sp, a, d, c, tol), tol);
  IndexReport rep;
  rep.method = "triple-delta";
  rep.value = qab.minus + qbc.minus - qac.minus;
  return rep;
}

IndexReport hormander_index(const SymplecticSpace& sp, const Mat& l1, const Mat& l2,
                            const Mat& m1, const Mat& m2, const Tolerances& tol) {
  const long front = triple_index(sp, l1, l2, m2, tol).value -
                     triple_index(sp, l1, l2, m1, tol).value;
  const long back = triple_index(sp, l1, m1, m2, tol).value -
                    triple_index(sp, l2, m1, m2, tol).value;
  if (front != back)
    throw std::runtime_error("hormander_index: the two triple-index expressions disagree");
  IndexReport rep;
  rep.method = "hormander-triple";
  rep.value = front;
  return rep;
}

IndexReport hormander_via_paths(const SymplecticSpace& sp, const Mat& l1, const Mat& l2,
                                const Mat& m1, const Mat& m2, const Tolerances& tol) {
  require_lagrangian(sp, l1, tol, "hormander_via_paths");
  require_lagrangian(sp, l2, tol, "hormander_via_paths");
  const LagrangianPath lam = unitary_geodesic(sp, l1, l2);
  const IndexReport rep2 =
      maslov_index(sp, lam, constant_lagrangian(m2, lam.a, lam.b), MaslovSign::plus, tol);
  const IndexReport rep1 =
      maslov_index(sp, lam, constant_lagrangian(m1, lam.a, lam.b), MaslovSign::plus, tol);
  IndexReport rep;
  rep.method = "hormander-paths";
  rep.value = rep2.value - rep1.value;
  rep.evaluations = rep1.evaluations + rep2.evaluations;
  return rep;
}

}  // namespace sik
