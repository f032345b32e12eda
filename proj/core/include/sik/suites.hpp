// suites.hpp — seeded property-audit suites over random instances, shared by
// the command line tool and the acceptance tests.

#pragma once

#include "sik/mean_index.hpp"

namespace sik {

// One report per seed; check names are stable strings. Instances are fully
// determined by (suite, seed, n), so reruns are byte-identical.
AuditReport audit_maslov_instance(int n, std::uint64_t seed, const Tolerances& tol);
AuditReport audit_forms_instance(int n, std::uint64_t seed, const Tolerances& tol);
AuditReport audit_iteration_instance(int n, std::uint64_t seed, const Tolerances& tol);
AuditReport audit_flow_instance(int n, std::uint64_t seed, const Tolerances& tol);

// suite in {section2, section3, section4, section5}; seeds run 0..count-1.
// threads <= 0 picks SIK_THREADS or the hardware default.
std::vector<AuditReport> run_suite(const std::string& suite, int seeds, int n,
                                   const Tolerances& tol, int threads = 0);

// Lagrangian containing a prescribed isotropic subspace (random otherwise).
Mat lagrangian_through(const SymplecticSpace& sp, const Mat& isotropic, Rng& rng,
                       const Tolerances& tol);

int thread_count_from_env(int requested);

}  // namespace sik
