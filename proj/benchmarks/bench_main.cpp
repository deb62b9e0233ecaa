#include <benchmark/benchmark.h>

#include <random>

#include "icsie/codeset.hpp"
#include "icsie/decoder.hpp"
#include "icsie/encoder.hpp"
#include "icsie/structure.hpp"

using namespace icsie;

namespace {

ProblemSpec clique(std::size_t n, std::size_t ds, std::size_t dc = 0) { return make_spec(clique_graph(n), 2, ds, dc); }

void BM_FieldMul(benchmark::State& state) {
  const FieldPtr f = field_make(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Elem> a(1024), b(1024);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = rng() % f->size();
    b[k] = rng() % f->size();
  }
  for (auto _ : state) {
    Elem acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) acc = f->add(acc, f->mul(a[k], b[k]));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(16)->Arg(256)->Arg(65521);

void BM_OptimalLengthClique(benchmark::State& state) {
  const ProblemSpec s = clique(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_length(s).length);
}
BENCHMARK(BM_OptimalLengthClique)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_OptimalLengthChannelErrors(benchmark::State& state) {
  const ProblemSpec s = clique(4, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_length(s).length);
}
BENCHMARK(BM_OptimalLengthChannelErrors)->Unit(benchmark::kMillisecond);

void BM_Minrank(benchmark::State& state) {
  const ProblemSpec s = clique(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(minrank(s).rank);
}
// Clique size, delta_s. Larger cliques exceed the assignment budget.
BENCHMARK(BM_Minrank)->Args({4, 1})->Args({5, 0})->Unit(benchmark::kMillisecond);

void BM_Validity(benchmark::State& state) {
  const ProblemSpec s = clique(static_cast<std::size_t>(state.range(0)), 1);
  const Matrix g = optimal_length(s).generator.matrix;
  for (auto _ : state) benchmark::DoNotOptimize(is_valid_generator(s, g).valid);
}
BENCHMARK(BM_Validity)->Arg(4)->Arg(8);

void BM_SphereOracle(benchmark::State& state) {
  const ProblemSpec s = clique(static_cast<std::size_t>(state.range(0)), 1);
  const Matrix g = optimal_length(s).generator.matrix;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_decodable(s, g));
}
BENCHMARK(BM_SphereOracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DecodeReceiver(benchmark::State& state) {
  const ProblemSpec s = clique(8, 1);
  const Matrix g = optimal_length(s).generator.matrix;
  const ReceiverContext ctx = build_context(s, g, 0);
  const Vector x(s.field, {1, 0, 1, 1, 0, 0, 1, 0});
  const Vector y = multiply(x, g);
  Vector cache = subvector(x, ctx.side);
  cache.set(3, cache[3] ^ 1u);
  for (auto _ : state) benchmark::DoNotOptimize(decode_with_context(ctx, 1, y, cache).value);
}
BENCHMARK(BM_DecodeReceiver);

void BM_BoundsReport(benchmark::State& state) {
  const ProblemSpec s = clique(4, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bounds_report(s).entries.size());
}
BENCHMARK(BM_BoundsReport)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
