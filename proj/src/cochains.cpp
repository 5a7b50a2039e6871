#include "codiff/cochains.hpp"

#include <set>

#include "codiff/kernels.hpp"

namespace codiff {

CochainSpace::CochainSpace(CoalgebraPtr coalgebra) : coalgebra_(std::move(coalgebra)) {
  const GradedSpace& w = coalgebra_->space();
  for (int n = 1; n <= coalgebra_->weight_cap(); ++n) {
    offsets_.push_back(coords_.size());
    const WordBasis& words = coalgebra_->words(n);
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) {
        coords_.push_back({n, i, j});
        parities_.push_back(w.parity(j) + words.parity(i));
      }
  }
}

std::size_t CochainSpace::index(int arity, std::size_t word, std::size_t output) const {
  if (arity < 1 || arity > coalgebra_->weight_cap()) throw std::out_of_range("CochainSpace::index: arity");
  return offsets_[static_cast<std::size_t>(arity - 1)] + word * coalgebra_->space().dim() + output;
}

std::vector<std::size_t> CochainSpace::select(int min_weight, int max_weight, std::optional<Parity> parity) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].arity >= min_weight && coords_[i].arity <= max_weight && (!parity || parities_[i] == *parity))
      out.push_back(i);
  return out;
}

SparseVector CochainSpace::to_vector(const Coderivation& c) const {
  if (!c.coalgebra().same_shape(*coalgebra_)) throw std::invalid_argument("CochainSpace::to_vector: coalgebra mismatch");
  std::map<std::size_t, Rational> acc;
  for (int n = 1; n <= coalgebra_->weight_cap(); ++n)
    for (const auto& [word, value] : c.part(n).table()) {
      std::size_t w = *coalgebra_->words(n).index_of(word);
      for (const auto& [j, v] : value) acc[index(n, w, j)] += v;
    }
  return SparseVector::from_map(acc);
}

std::optional<Parity> CochainSpace::parity_of(const SparseVector& v) const {
  std::optional<Parity> p;
  for (const auto& [i, x] : v) {
    Parity q = parity(i);
    if (p && *p != q) throw std::invalid_argument("cochain vector is not parity-homogeneous");
    p = q;
  }
  return p;
}

Coderivation CochainSpace::to_coderivation(const SparseVector& v, Parity parity) const {
  Coderivation c(coalgebra_, parity);
  for (const auto& [i, x] : v) {
    const Coordinate& k = coords_.at(i);
    if (parities_[i] != parity) throw std::invalid_argument("CochainSpace::to_coderivation: parity mismatch");
    SparseVector out;
    out.add(k.output, x);
    c.add(k.arity, coalgebra_->words(k.arity).letters(k.word), out);
  }
  return c;
}

Coderivation CochainSpace::to_coderivation(const SparseVector& v) const {
  return to_coderivation(v, parity_of(v).value_or(Parity::even));
}

Coderivation CochainSpace::basis_element(std::size_t i) const { return to_coderivation(SparseVector::unit(i)); }

// ---------------------------------------------------------------- LieStructure

LieStructure::LieStructure(Coderivation d) : cochains_(d.coalgebra_ptr()), d_(std::move(d)) {
  if (d_.parity() != Parity::odd) throw std::invalid_argument("LieStructure: the differential element must be odd");
}

SparseVector LieStructure::compute_differential(std::size_t j) const {
  return cochains_.to_vector(kernels::bracket(d_, cochains_.basis_element(j), kernels::Mode::serial));
}

SparseVector LieStructure::compute_bracket(std::size_t i, std::size_t j) const {
  return cochains_.to_vector(
      kernels::bracket(cochains_.basis_element(i), cochains_.basis_element(j), kernels::Mode::serial));
}

static std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

void LieStructure::prepare_differentials(const std::vector<std::size_t>& cols) const {
  std::vector<std::size_t> missing;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    std::set<std::size_t> seen;
    for (std::size_t j : cols)
      if (!d_cache_.count(j) && seen.insert(j).second) missing.push_back(j);
  }
  if (missing.empty()) return;
  auto values = kernels::differential_columns(*this, missing, kernels::Mode::parallel);
  std::lock_guard<std::mutex> lock(mutex_);
  for (std::size_t k = 0; k < missing.size(); ++k) d_cache_.emplace(missing[k], std::move(values[k]));
}

void LieStructure::prepare_brackets(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const {
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    std::set<std::uint64_t> seen;
    for (const auto& [i, j] : pairs) {
      auto key = pair_key(i, j);
      if (!bracket_cache_.count(key) && seen.insert(key).second) missing.emplace_back(i, j);
    }
  }
  if (missing.empty()) return;
  auto values = kernels::bracket_table(*this, missing, kernels::Mode::parallel);
  std::lock_guard<std::mutex> lock(mutex_);
  for (std::size_t k = 0; k < missing.size(); ++k)
    bracket_cache_.emplace(pair_key(missing[k].first, missing[k].second), std::move(values[k]));
}

const SparseVector& LieStructure::differential_of_basis(std::size_t j) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = d_cache_.find(j);
    if (it != d_cache_.end()) return it->second;
  }
  SparseVector v = compute_differential(j);
  std::lock_guard<std::mutex> lock(mutex_);
  return d_cache_.emplace(j, std::move(v)).first->second;
}

const SparseVector& LieStructure::bracket_of_basis(std::size_t i, std::size_t j) const {
  auto key = pair_key(i, j);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
  }
  SparseVector v = compute_bracket(i, j);
  std::lock_guard<std::mutex> lock(mutex_);
  return bracket_cache_.emplace(key, std::move(v)).first->second;
}

SparseVector LieStructure::differential(const SparseVector& x) const {
  std::vector<std::size_t> cols;
  for (const auto& [j, v] : x) cols.push_back(j);
  prepare_differentials(cols);
  std::map<std::size_t, Rational> acc;
  for (const auto& [j, v] : x)
    for (const auto& [i, c] : differential_of_basis(j)) acc[i] += v * c;
  return SparseVector::from_map(acc);
}

SparseVector LieStructure::bracket(const SparseVector& x, const SparseVector& y) const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) pairs.emplace_back(i, j);
  prepare_brackets(pairs);
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const SparseVector& br = bracket_of_basis(i, j);
      if (br.empty()) continue;
      Rational s = a * b;
      for (const auto& [k, c] : br) acc[k] += s * c;
    }
  return SparseVector::from_map(acc);
}

Matrix LieStructure::differential_matrix(const std::vector<std::size_t>& cols, const std::vector<std::size_t>& rows) const {
  prepare_differentials(cols);
  std::vector<std::size_t> position(cochains_.dim(), static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < rows.size(); ++r) position[rows[r]] = r;
  std::vector<SparseVector> columns;
  columns.reserve(cols.size());
  for (std::size_t j : cols) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, v] : differential_of_basis(j))
      if (position[i] != static_cast<std::size_t>(-1)) acc[position[i]] += v;
    columns.push_back(SparseVector::from_map(acc));
  }
  return Matrix::from_columns(columns, rows.size());
}

}  // namespace codiff
