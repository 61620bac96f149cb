#include <benchmark/benchmark.h>

#include "cob2/cobordism.hpp"
#include "cob2/dsl.hpp"
#include "cob2/dw_oracle.hpp"
#include "cob2/evaluator.hpp"
#include "cob2/frobenius.hpp"
#include "cob2/group.hpp"

namespace {

void BM_EvaluateRandomWord(benchmark::State& state) {
  const cob2::Tqft z(cob2::group_center(cob2::builtin("S3")));
  const auto width = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto w = cob2::random_word(seed++, width, 6);
    benchmark::DoNotOptimize(z(w));
  }
}
BENCHMARK(BM_EvaluateRandomWord)->Arg(2)->Arg(3)->Arg(4);

void BM_GenusInvariant(benchmark::State& state) {
  const cob2::Tqft z(cob2::group_center(cob2::builtin("D4")));
  const auto genus = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(z.genus_invariant(genus));
}
BENCHMARK(BM_GenusInvariant)->Arg(1)->Arg(10)->Arg(100);

void BM_CommutatorCount(benchmark::State& state) {
  const auto g = cob2::builtin("Q8");
  const auto genus = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cob2::commutator_count(g, genus));
}
BENCHMARK(BM_CommutatorCount)->Arg(1)->Arg(2)->Arg(3);

void BM_NormalForm(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto w = cob2::random_word(seed++, 5, 10);
    benchmark::DoNotOptimize(cob2::normal_form(w));
  }
}
BENCHMARK(BM_NormalForm);

void BM_ParseFormat(benchmark::State& state) {
  const std::string text = cob2::format(cob2::random_word(7, 6, 40));
  for (auto _ : state) benchmark::DoNotOptimize(cob2::format(cob2::parse(text)));
}
BENCHMARK(BM_ParseFormat);

void BM_CheckAll(benchmark::State& state) {
  const auto a = cob2::group_center(cob2::builtin("Q8"));
  for (auto _ : state) benchmark::DoNotOptimize(cob2::check_all(a).passed());
}
BENCHMARK(BM_CheckAll);

}  // namespace

BENCHMARK_MAIN();
