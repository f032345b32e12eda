#include "sik/suites.hpp"
#include "sik/triple.hpp"

#include <benchmark/benchmark.h>

using namespace sik;

namespace {
const Tolerances tol;
}

static void BM_SubspaceIntersect(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(n));
  const Mat a = random_lagrangian(sp, 1);
  const Mat b = random_lagrangian(sp, 2);
  for (auto _ : state) benchmark::DoNotOptimize(frame_intersect(a, b, tol.rank_tol));
}
BENCHMARK(BM_SubspaceIntersect)->Arg(2)->Arg(4)->Arg(8);

static void BM_QForm(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(n));
  const Mat a = random_lagrangian(sp, 1);
  const Mat b = random_lagrangian(sp, 2);
  const Mat c = random_lagrangian(sp, 3);
  for (auto _ : state) benchmark::DoNotOptimize(q_form(sp, a, b, c, tol));
}
BENCHMARK(BM_QForm)->Arg(2)->Arg(4);

static void BM_TripleIndex(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const SymplecticSpace sp = SymplecticSpace::standard(static_cast<int>(n));
  const Mat a = random_lagrangian(sp, 1);
  const Mat b = random_lagrangian(sp, 2);
  const Mat c = random_lagrangian(sp, 3);
  for (auto _ : state) benchmark::DoNotOptimize(triple_index(sp, a, b, c, tol).value);
}
BENCHMARK(BM_TripleIndex)->Arg(2)->Arg(4);

static void BM_MaslovTypeIndex(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  const SymplecticPath g = random_symplectic_path(sp, 7, 1.0, 4, 1.2);
  const Mat w = graph_frame(Mat::Identity(sp.dim(), sp.dim()));
  for (auto _ : state) benchmark::DoNotOptimize(maslov_type_index(sp, g, w, tol).value);
}
BENCHMARK(BM_MaslovTypeIndex)->Arg(1)->Arg(2)->Arg(3);

static void BM_HormanderViaPaths(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  const Mat l1 = random_lagrangian(sp, 1);
  const Mat l2 = random_lagrangian(sp, 2);
  const Mat m1 = random_lagrangian(sp, 3);
  const Mat m2 = random_lagrangian(sp, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(hormander_via_paths(sp, l1, l2, m1, m2, tol).value);
}
BENCHMARK(BM_HormanderViaPaths)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
