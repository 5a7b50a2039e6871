#include <benchmark/benchmark.h>

#include "codiff/cochains.hpp"
#include "codiff/kernels.hpp"
#include "codiff/transport.hpp"

using namespace codiff;

namespace {

// sl2 with [e,f] = h, [h,e] = 2e, [h,f] = -2f
Coderivation sl2_d(int cap) {
  GradedSpace v({{"e", Parity::even}, {"f", Parity::even}, {"h", Parity::even}});
  PairTable t;
  t[{0, 1}] = SparseVector::unit(2);
  t[{2, 0}] = SparseVector::unit(0).scaled(2);
  t[{2, 1}] = SparseVector::unit(1).scaled(-2);
  return lie_codifferential(v, t, cap);
}

// upper triangular 2x2 matrices on T(ΠV); cochains grow like 3^cap
Coderivation triangular_d(int cap) {
  GradedSpace v({{"e11", Parity::even}, {"e12", Parity::even}, {"e22", Parity::even}});
  PairTable t;
  t[{0, 0}] = SparseVector::unit(0);
  t[{0, 1}] = SparseVector::unit(1);
  t[{1, 2}] = SparseVector::unit(1);
  t[{2, 2}] = SparseVector::unit(2);
  return assoc_codifferential(v, t, cap);
}

// Deterministic coderivation touching every word.
Coderivation dense(const CoalgebraPtr& co, Parity parity) {
  Coderivation c(co, parity);
  const GradedSpace& w = co->space();
  for (int n = 1; n <= co->weight_cap(); ++n) {
    const WordBasis& words = co->words(n);
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) {
        if (w.parity(j) != parity + words.parity(i)) continue;
        int x = static_cast<int>((3 * i + 5 * j + n) % 5) - 2;
        if (x == 0) continue;
        SparseVector v;
        v.add(j, x);
        c.add(n, words.letters(i), v);
      }
  }
  return c;
}

kernels::Mode mode_of(const benchmark::State& state) {
  return state.range(1) ? kernels::Mode::parallel : kernels::Mode::serial;
}

void differential_columns(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  auto mode = mode_of(state);
  for (auto _ : state) {
    LieStructure lie(triangular_d(cap));
    std::vector<std::size_t> cols(lie.cochains().dim());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    benchmark::DoNotOptimize(kernels::differential_columns(lie, cols, mode));
  }
}

void bracket_table(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  auto mode = mode_of(state);
  LieStructure lie(sl2_d(cap));
  const CochainSpace& cs = lie.cochains();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i : cs.select(2, 2))
    for (std::size_t j : cs.select(1, cap - 1)) pairs.emplace_back(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bracket_table(lie, pairs, mode));
  state.counters["pairs"] = static_cast<double>(pairs.size());
}

void full_bracket(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  auto mode = mode_of(state);
  GradedSpace w({{"a", Parity::even}, {"b", Parity::odd}, {"c", Parity::even}, {"d", Parity::odd}});
  auto co = make_coalgebra(w, WordKind::tensor, cap);
  Coderivation x = dense(co, Parity::odd), y = dense(co, Parity::even);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bracket(x, y, mode));
}

}  // namespace

BENCHMARK(differential_columns)->ArgsProduct({{3, 4, 5}, {0, 1}})->ArgNames({"cap", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(bracket_table)->ArgsProduct({{3, 4}, {0, 1}})->ArgNames({"cap", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(full_bracket)->ArgsProduct({{3, 4}, {0, 1}})->ArgNames({"cap", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
