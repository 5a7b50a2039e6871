#pragma once

#include <map>
#include <utility>

#include "codiff/coderiv.hpp"

namespace codiff {

// Structure constants of a bilinear operation on V, keyed by ordered basis pairs.
using PairTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

// Quadratic codifferential on S(ΠV) with d(πx·πy) = (-1)^{|x|} π[x,y].
// Each unordered pair may appear once; the other order follows by antisymmetry.
Coderivation lie_codifferential(const GradedSpace& v, const PairTable& bracket, int weight_cap);

// Quadratic codifferential on T(ΠV) with d(πx, πy) = (-1)^{|x|} π(xy).
Coderivation assoc_codifferential(const GradedSpace& v, const PairTable& product, int weight_cap);

}  // namespace codiff
