#include <benchmark/benchmark.h>

#include "degseq/enumeration.hpp"

namespace {

const degseq::Analysis kEgl{degseq::Analysis::Mode::Graphical, degseq::Algorithm::ErdosGallaiLinear};

void BM_Serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = degseq::run_serial(n, degseq::SequenceKind::ZerofreeEven, kEgl);
    benchmark::DoNotOptimize(r.accepted);
  }
}

void BM_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  const auto tasks = degseq::slice_plan(n, degseq::SequenceKind::ZerofreeEven);
  for (auto _ : state) {
    auto r = degseq::run_parallel(tasks, kEgl, threads);
    benchmark::DoNotOptimize(r.accepted);
  }
}

void BM_Tester(benchmark::State& state) {
  const auto alg = degseq::kAllAlgorithms[state.range(1)];
  const degseq::Analysis analysis{degseq::Analysis::Mode::Graphical, alg};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = degseq::run_serial(n, degseq::SequenceKind::Even, analysis);
    benchmark::DoNotOptimize(r.accepted);
  }
  state.SetLabel(std::string(degseq::to_string(alg)));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{11, 13}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tester)->ArgsProduct({{11}, {0, 1, 2, 3, 4, 5, 6}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
