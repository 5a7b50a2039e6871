#pragma once

#include <vector>

#include "codiff/basealg.hpp"
#include "codiff/cochains.hpp"

namespace codiff::testing {

// Maurer–Cartan check without bracket formulas: compose d⊗1 + Σ δ_k⊗e_k with
// itself on every canonical word and require the W-component to vanish.
bool squares_to_zero(const Coderivation& d, const BaseAlgebra& base, const std::vector<Coderivation>& delta);
bool squares_to_zero(const LieStructure& lie, const BaseAlgebra& base, const std::vector<SparseVector>& delta);

// Every δ whose coefficients take values in `values` on at most `max_support` cochain
// coordinates per basis element of m (restricted to `allowed`, parity forced by the
// basis element) and which passes squares_to_zero. Throws past `limit` candidates.
std::vector<std::vector<SparseVector>> brute_force_mc(const LieStructure& lie, const BaseAlgebra& base,
                                                      const std::vector<std::size_t>& allowed,
                                                      const std::vector<Rational>& values, int max_support,
                                                      std::size_t limit = 2000000);

}  // namespace codiff::testing
