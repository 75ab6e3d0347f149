#include <random>

#include <benchmark/benchmark.h>

#include "foldhecke/alcove.hpp"
#include "foldhecke/hecke_params.hpp"
#include "foldhecke/lie_engine.hpp"

namespace {

std::vector<fh::AlcovePoint> random_points(const fh::Alcove& al, int count) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  std::vector<fh::AlcovePoint> xs;
  for (int k = 0; k < count; ++k) {
    fh::AlcovePoint x;
    x.c.resize(al.num_nodes());
    for (int i = 1; i < al.num_nodes(); ++i) x.c[i] = fh::CScalar(fh::Rat(num(rng), den(rng)), fh::Rat(num(rng), den(rng)));
    x.c[0] = (fh::CScalar(1) - al.level(x)) / fh::CScalar(fh::Rat(al.folded().marks()[0]));
    xs.push_back(x);
  }
  return xs;
}

const fh::ChevalleyAlgebra& e6() {
  static const fh::ChevalleyAlgebra g("E6", 2);
  return g;
}

void BM_JacobiParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(e6().check_jacobi());
}
void BM_JacobiSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(e6().check_jacobi_serial());
}

void BM_ReduceBatch(benchmark::State& st) {
  fh::Alcove al(fh::FoldedRootDatum::standard("E6", 2));
  auto xs = random_points(al, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(al.reduce_batch(xs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
void BM_ReduceBatchSerial(benchmark::State& st) {
  fh::Alcove al(fh::FoldedRootDatum::standard("E6", 2));
  auto xs = random_points(al, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(al.reduce_batch_serial(xs));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_TableRows(benchmark::State& st) {
  auto cases = fh::enumerate_cases("D6", 2);
  for (auto _ : st) benchmark::DoNotOptimize(fh::table_rows(cases, st.range(0) != 0));
}

}  // namespace

BENCHMARK(BM_JacobiParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReduceBatch)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReduceBatchSerial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableRows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
