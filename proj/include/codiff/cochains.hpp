#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "codiff/coderiv.hpp"

namespace codiff {

// Coordinates on L = ⊕_{n ≤ N} Hom(C^n(W), W): one per (arity, canonical word, output letter),
// ordered by arity, then word index, then output letter.
class CochainSpace {
 public:
  struct Coordinate {
    int arity;
    std::size_t word;
    std::size_t output;
  };

  explicit CochainSpace(CoalgebraPtr coalgebra);

  const Coalgebra& coalgebra() const { return *coalgebra_; }
  const CoalgebraPtr& coalgebra_ptr() const { return coalgebra_; }
  std::size_t dim() const { return coords_.size(); }
  const Coordinate& coordinate(std::size_t i) const { return coords_.at(i); }
  Parity parity(std::size_t i) const { return parities_.at(i); }
  int weight(std::size_t i) const { return coords_.at(i).arity; }
  std::size_t index(int arity, std::size_t word, std::size_t output) const;

  // Indices with min_weight ≤ weight ≤ max_weight and the given parity (any when empty).
  std::vector<std::size_t> select(int min_weight, int max_weight, std::optional<Parity> parity = std::nullopt) const;

  SparseVector to_vector(const Coderivation& c) const;
  Coderivation to_coderivation(const SparseVector& v, Parity parity) const;
  // Parity read off the support; an empty vector gives the even zero.
  Coderivation to_coderivation(const SparseVector& v) const;
  Coderivation basis_element(std::size_t i) const;
  // Parity of a homogeneous vector, nullopt for zero; throws when mixed.
  std::optional<Parity> parity_of(const SparseVector& v) const;

 private:
  CoalgebraPtr coalgebra_;
  std::vector<Coordinate> coords_;
  std::vector<Parity> parities_;
  std::vector<std::size_t> offsets_;
};

// The differential graded Lie algebra (L_{≤N}, D = [d,-], [-,-]) in cochain coordinates,
// with brackets of basis elements memoized.
class LieStructure {
 public:
  explicit LieStructure(Coderivation d);

  const CochainSpace& cochains() const { return cochains_; }
  const Coderivation& differential_element() const { return d_; }

  const SparseVector& differential_of_basis(std::size_t j) const;
  SparseVector differential(const SparseVector& x) const;
  const SparseVector& bracket_of_basis(std::size_t i, std::size_t j) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  // Fill the caches for many entries at once through the parallel kernels.
  void prepare_differentials(const std::vector<std::size_t>& cols) const;
  void prepare_brackets(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const;

  // Matrix of D from the given columns into the given rows (other rows dropped).
  Matrix differential_matrix(const std::vector<std::size_t>& cols, const std::vector<std::size_t>& rows) const;

  SparseVector compute_differential(std::size_t j) const;
  SparseVector compute_bracket(std::size_t i, std::size_t j) const;

 private:
  CochainSpace cochains_;
  Coderivation d_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, SparseVector> d_cache_;
  mutable std::unordered_map<std::uint64_t, SparseVector> bracket_cache_;
};

}  // namespace codiff
