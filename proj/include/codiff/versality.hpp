#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codiff/deform.hpp"

namespace codiff {

// A base change f (given on generators) and a gauge element λ over the target
// with exp(ad λ)(d + f*(δ)) = d + δ'.
struct Factorization {
  std::vector<SparseVector> generator_images;
  Coefficients gauge;
};

// For a deformation over an infinitesimal base: the images of the parameters of
// universal_infinitesimal(p), read off the class decomposition of each coefficient.
// nullopt when some coefficient involves a class that is not a parameter.
std::optional<Factorization> factor_infinitesimal(const DeformationProblem& p, const Deformation& def);

struct VerifyLevel {
  int level;                   // solving modulo m'^(level+1)
  std::size_t unknowns;
  std::size_t equations;
  std::size_t rank;
  std::size_t generator_freedom;  // dimension of the generator corrections left undetermined
};

struct VerifyResult {
  bool ok = false;
  std::string message;
  std::optional<Factorization> factorization;
  std::vector<VerifyLevel> levels;
};

// Builds f and λ order by order along the m'-adic filtration of the target base.
// The target base must satisfy m'^(order+1) = 0 for the miniversal order.
VerifyResult verify_versality(const DeformationProblem& p, const MiniversalDeformation& m, const Deformation& target);

// Evaluate a polynomial in the source generators at the given images.
SparseVector evaluate_at(const BaseAlgebra& target, const Polynomial& poly, const std::vector<SparseVector>& images);

// Homogeneous basis of m'^n modulo m'^(n+1) for n = 1, 2, ... (the union is a basis of m').
std::vector<std::vector<SparseVector>> filtration_basis(const BaseAlgebra& a);

}  // namespace codiff
