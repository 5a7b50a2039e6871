#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "codiff/coderiv.hpp"

namespace codiff {
class LieStructure;
}

namespace codiff::kernels {

// Every kernel exists as a plain loop (serial) and an OpenMP loop (parallel).
// Each output slot is computed independently, so both give identical results.
enum class Mode { serial, parallel };

int thread_count();

std::vector<SparseVector> map_indexed(std::size_t n, const std::function<SparseVector(std::size_t)>& f, Mode mode);

// Full bracket [a, b], assembled entry by entry over all canonical words.
Coderivation bracket(const Coderivation& a, const Coderivation& b, Mode mode);

// Columns D(e_j) for the given cochain indices.
std::vector<SparseVector> differential_columns(const LieStructure& lie, const std::vector<std::size_t>& cols, Mode mode);

// Brackets [e_i, e_j] for the given index pairs.
std::vector<SparseVector> bracket_table(const LieStructure& lie, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        Mode mode);

}  // namespace codiff::kernels
