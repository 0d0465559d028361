#include <benchmark/benchmark.h>

#include "vanish/invariants.hpp"
#include "vanish/points.hpp"
#include "vanish/rmcode.hpp"
#include "vanish/vanishing.hpp"

using namespace vanish;

namespace {

ParameterizationSpec surface_spec(SetKind mode) {
  std::string text =
      "q = 5\nvars = y1, y2\nf1 = y1+1\nf2 = y2+1\nf3 = y1*y2\nmode = " +
      to_string(mode) + "\n";
  return parse_spec(text);
}

void bm_projective_ideal(benchmark::State& state) {
  auto spec = surface_spec(SetKind::Projective);
  for (auto _ : state)
    benchmark::DoNotOptimize(projective_vanishing_ideal(spec));
}
BENCHMARK(bm_projective_ideal)->Unit(benchmark::kMillisecond);

void bm_algebraic_ideal(benchmark::State& state) {
  auto spec = surface_spec(SetKind::ProjectiveAlgebraic);
  for (auto _ : state)
    benchmark::DoNotOptimize(projective_algebraic_vanishing_ideal(spec));
}
BENCHMARK(bm_algebraic_ideal)->Unit(benchmark::kMillisecond);

void bm_hilbert_profile(benchmark::State& state) {
  auto res = projective_vanishing_ideal(surface_spec(SetKind::Projective));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_profile(res.gb));
}
BENCHMARK(bm_hilbert_profile)->Unit(benchmark::kMicrosecond);

void bm_enumerate(benchmark::State& state) {
  auto spec = surface_spec(SetKind::Projective);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_set(spec, SetKind::Projective));
}
BENCHMARK(bm_enumerate)->Unit(benchmark::kMicrosecond);

void bm_min_distance(benchmark::State& state) {
  auto spec = surface_spec(SetKind::Projective);
  auto pts = enumerate_set(spec, SetKind::Projective);
  auto code = build_code(pts, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimum_distance(code));
}
BENCHMARK(bm_min_distance)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
