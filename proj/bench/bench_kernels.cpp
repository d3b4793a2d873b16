#include <benchmark/benchmark.h>

#include "parking/hsop.hpp"
#include "parking/kernels.hpp"
#include "parking/locus.hpp"

using namespace parking;

namespace {

struct ParkFixture {
  ReflectionGroup g;
  ParkSpace park;
  GSet s;
  explicit ParkFixture(GroupSpec spec, int k) : g(ReflectionGroup::build(spec)), park(g, k), s(park.to_gset()) {}
};

ParkFixture& a5() {
  static ParkFixture f({Family::A, 5}, 1);
  return f;
}

ParkFixture& b3() {
  static ParkFixture f({Family::B, 3}, 2);
  return f;
}

struct TrackFixture {
  ReflectionGroup g = ReflectionGroup::build(Family::A, 4);
  PolynomialMap theta = sample_theta(hom_basis_bruteforce(g, 2), 1);
  CompiledMap f{theta};
  std::vector<CVec> starts = total_degree_starts(3, 2 * 4 + 1);
};

TrackFixture& s4k2() {
  static TrackFixture f;
  return f;
}

void BM_FixedCountTable(benchmark::State& st) {
  auto& f = st.range(0) ? b3() : a5();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fixed_count_table(f.s));
}
void BM_FixedCountTableSerial(benchmark::State& st) {
  auto& f = st.range(0) ? b3() : a5();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fixed_count_table_serial(f.s));
}
void BM_AllStabilizers(benchmark::State& st) {
  auto& f = st.range(0) ? b3() : a5();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::all_stabilizers(f.s));
}
void BM_AllStabilizersSerial(benchmark::State& st) {
  auto& f = st.range(0) ? b3() : a5();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::all_stabilizers_serial(f.s));
}

// 729 paths of the S4, k = 2 total-degree homotopy
void BM_TrackAll(benchmark::State& st) {
  auto& f = s4k2();
  TotalDegreeHomotopy h(f.f, std::polar(1.0, 0.7));
  TrackerConfig cfg;
  for (auto _ : st) benchmark::DoNotOptimize(track_all(h, f.starts, 0.0, 1.0, cfg));
}
void BM_TrackAllSerial(benchmark::State& st) {
  auto& f = s4k2();
  TotalDegreeHomotopy h(f.f, std::polar(1.0, 0.7));
  TrackerConfig cfg;
  for (auto _ : st) benchmark::DoNotOptimize(track_all_serial(h, f.starts, 0.0, 1.0, cfg));
}

}  // namespace

// argument 0 = A5 with k = 1 (1296 points), 1 = B3 with k = 2 (2197 points)
BENCHMARK(BM_FixedCountTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FixedCountTableSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AllStabilizers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AllStabilizersSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrackAll)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrackAllSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
