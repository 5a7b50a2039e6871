#include "codiff/kernels.hpp"

#include <omp.h>

#include <exception>
#include <set>

#include "codiff/cochains.hpp"

namespace codiff::kernels {

int thread_count() { return omp_get_max_threads(); }

std::vector<SparseVector> map_indexed(std::size_t n, const std::function<SparseVector(std::size_t)>& f, Mode mode) {
  std::vector<SparseVector> out(n);
  if (mode == Mode::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr error;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(codiff_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

Coderivation bracket(const Coderivation& a, const Coderivation& b, Mode mode) {
  if (a.coalgebra_ptr() != b.coalgebra_ptr() && !a.coalgebra().same_shape(b.coalgebra()))
    throw std::invalid_argument("bracket: coderivations live on different coalgebras");
  const Coalgebra& co = a.coalgebra();
  Coderivation result(a.coalgebra_ptr(), a.parity() + b.parity());
  std::set<int> arities;
  for (int k : a.nonzero_arities())
    for (int l : b.nonzero_arities())
      if (k + l - 1 <= co.weight_cap()) arities.insert(k + l - 1);
  std::vector<std::pair<int, std::size_t>> slots;
  for (int n : arities)
    for (std::size_t w = 0; w < co.words(n).size(); ++w) slots.emplace_back(n, w);
  auto values = map_indexed(
      slots.size(),
      [&](std::size_t s) { return bracket_entry(a, b, co.words(slots[s].first).letters(slots[s].second)); }, mode);
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (!values[s].empty()) result.add(slots[s].first, co.words(slots[s].first).letters(slots[s].second), values[s]);
  return result;
}

std::vector<SparseVector> differential_columns(const LieStructure& lie, const std::vector<std::size_t>& cols, Mode mode) {
  return map_indexed(cols.size(), [&](std::size_t k) { return lie.compute_differential(cols[k]); }, mode);
}

std::vector<SparseVector> bracket_table(const LieStructure& lie, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        Mode mode) {
  return map_indexed(
      pairs.size(), [&](std::size_t k) { return lie.compute_bracket(pairs[k].first, pairs[k].second); }, mode);
}

}  // namespace codiff::kernels
