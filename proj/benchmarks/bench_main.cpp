#include <benchmark/benchmark.h>

#include "pairbot/analysis.hpp"
#include "pairbot/engine.hpp"
#include "pairbot/explorer.hpp"

namespace pairbot {
namespace {

Scene short_line(int pairs) {
  Scene s;
  for (int i = 0; i < pairs; ++i) s.pairs.push_back({{-i, 0}, {-i, 0}, i == 0});
  return s;
}

// Hexagon of seven cells with robots queued to its west.
Scene hexagon(int pairs) {
  Scene s = short_line(pairs);
  s.object = {{4, 0}, {5, 0}, {4, 1}, {3, 1}, {3, 0}, {4, -1}, {5, -1}};
  return s;
}

void BM_ExploreMarching(benchmark::State& state) {
  const Configuration c = to_configuration(short_line(3));
  ExploreOptions opts;
  opts.depth_bound = static_cast<std::size_t>(state.range(0));
  opts.predicate = [](const Configuration& x) { return is_line_formed(x); };
  std::size_t states = 0;
  for (auto _ : state) {
    const ExploreReport r = explore(c, Algorithm::Marching, opts);
    states = r.states;
    benchmark::DoNotOptimize(states);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_ExploreMarching)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_NonCoatingSet(benchmark::State& state) {
  const std::vector<Point> object = {{6, 0}, {6, -1}, {5, -1}, {4, 0}, {4, 1}, {5, 1},
                                     {8, 1}, {8, 0}, {7, 0}, {6, 2}, {7, 2}};
  AnalysisOptions opts;
  opts.margin = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(non_coating_set(object, {{0, 0}}, opts));
}
BENCHMARK(BM_NonCoatingSet)->Arg(3)->Arg(6)->Arg(12);

void BM_RunCoating(benchmark::State& state) {
  const Scene s = hexagon(14);
  const auto kind = static_cast<SchedulerKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(s, Algorithm::Coating, {kind, 1}, 30000));
  }
}
BENCHMARK(BM_RunCoating)
    ->Arg(static_cast<int>(SchedulerKind::FSync))
    ->Arg(static_cast<int>(SchedulerKind::AsyncRandom))
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pairbot

BENCHMARK_MAIN();
