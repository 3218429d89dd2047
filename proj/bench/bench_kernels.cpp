#include <benchmark/benchmark.h>

#include "sll/analyze.hpp"
#include "sll/examples.hpp"
#include "sll/kernels.hpp"

using namespace sll;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

AlgebraDocument blocks(int count) {
  auto doc = gen_example1();
  for (int i = 1; i < count; ++i) doc = direct_sum(doc, gen_example1());
  return doc;
}

void BM_identity(benchmark::State& state) {
  const auto doc = direct_sum(gen_example2(5), gen_example1());
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::identity_violations(doc.algebra, exec));
  state.SetLabel("dim " + std::to_string(doc.algebra.dim()));
}
BENCHMARK(BM_identity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_oracle(benchmark::State& state) {
  auto doc = blocks(static_cast<int>(state.range(1)));
  (void)validate(doc.algebra);
  const auto d = split(doc.algebra, {doc.cartan});
  const auto p = partition_roots(d, compute_frak_I(d.algebra));
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(simplicity_oracle(d, p, std::nullopt, exec));
}
BENCHMARK(BM_oracle)->Args({0, 2})->Args({1, 2})->Args({0, 3})->Args({1, 3})->Unit(benchmark::kMillisecond);

// Chain graph with a skip letter: every state reaches every later one.
void BM_reachable(benchmark::State& state) {
  kernels::SumGraph g;
  g.states = 2000;
  g.letters = 2;
  g.next.assign(g.states * g.letters, -1);
  for (std::size_t s = 0; s + 1 < g.states; ++s) g.next[s * 2] = static_cast<std::int32_t>(s + 1);
  for (std::size_t s = 0; s + 7 < g.states; ++s) g.next[s * 2 + 1] = static_cast<std::int32_t>(s + 7);
  std::vector<std::size_t> sources;
  for (std::size_t s = 0; s < g.states; s += 20) sources.push_back(s);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reachable_from(g, sources, exec));
}
BENCHMARK(BM_reachable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
