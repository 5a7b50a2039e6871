#pragma once

#include <map>
#include <utility>
#include <vector>

#include "codiff/basealg.hpp"

namespace codiff {

// Harrison cochains of A with coefficients in K (an infinitesimal module, so the
// module-action terms of the coboundary drop out).
//   degree 1: lambda : m -> K, one coordinate per basis element of m
//   degree 2: graded symmetric phi : m x m -> K, one coordinate per pair i <= j
//             (odd diagonal pairs are forced to vanish and omitted)
//   degree 3: arbitrary maps m x m x m -> K, one coordinate per ordered triple
class HarrisonComplex {
 public:
  explicit HarrisonComplex(const BaseAlgebra& a);

  const BaseAlgebra& algebra() const { return *a_; }
  std::size_t dim1() const { return a_->dim(); }
  std::size_t dim2() const { return pairs_.size(); }
  std::size_t dim3() const { return a_->dim() * a_->dim() * a_->dim(); }
  const std::pair<std::size_t, std::size_t>& pair(std::size_t k) const { return pairs_.at(k); }
  Parity parity1(std::size_t i) const { return a_->parity(i); }
  Parity parity2(std::size_t k) const { return a_->parity(pairs_[k].first) + a_->parity(pairs_[k].second); }
  // Value of a degree-2 cochain on an ordered basis pair, using graded symmetry.
  Rational value2(const SparseVector& phi, std::size_t i, std::size_t j) const;
  // Degree-2 cochain given on ordered pairs; throws if the values are not graded symmetric.
  SparseVector from_pairs(const std::map<std::pair<std::size_t, std::size_t>, Rational>& values) const;

  SparseVector d1(const SparseVector& lambda) const;  // d1 lambda (a,b) = -lambda(ab)
  SparseVector d2(const SparseVector& phi) const;     // d2 phi (a,b,c) = -phi(ab,c) + phi(a,bc)
  Matrix d1_matrix() const;
  Matrix d2_matrix() const;
  std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * a_->dim() + j) * a_->dim() + k;
  }

 private:
  const BaseAlgebra* a_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
};

struct HarrisonClasses {
  int degree;
  std::vector<SparseVector> cocycles, coboundaries, representatives;
  std::vector<Parity> parities;  // of the representatives
  std::size_t dim(Parity p) const;
  std::size_t dim() const { return representatives.size(); }
};
// Ha^1 (no coboundaries) or Ha^2 of A with coefficients in K.
HarrisonClasses ha(const HarrisonComplex& c, int degree);
// dim Ha^k(A, N) split by total parity, for an infinitesimal module N with the given parities.
std::pair<std::size_t, std::size_t> ha_dims(const HarrisonComplex& c, int degree, const std::vector<Parity>& module_parities);

// A + M with M = Ha^2(A,K)^*, built from cocycle representatives through mu*.
struct UniversalExtension {
  Extension extension;
  HarrisonClasses classes;
};
UniversalExtension universal_infinitesimal_extension(const BaseAlgebra& a);

// The same extension from a presentation A = F/J: the algebra F/(m J), with
// M = J/(m J) spanned by the images of minimal generators of J.
struct PresentedExtension {
  BaseAlgebra algebra;
  std::vector<SparseVector> projection;       // onto A
  std::vector<Polynomial> module_generators;  // minimal generators of J
  std::vector<SparseVector> module_basis;     // their images in F/(m J)
};
PresentedExtension universal_extension_by_presentation(const BaseAlgebra& a);

// Lift of f : A -> A' to the universal extension of A, landing in an extension of A'.
AlgebraMorphism extend_morphism(const UniversalExtension& source, const Extension& target, const AlgebraMorphism& f);

// The isomorphism (n, a) -> (n + lambda(a), a) from the extension with cocycle
// phi + d1 lambda onto the one with cocycle phi (same base and module).
AlgebraMorphism cocycle_equivalence(const Extension& shifted, const Extension& original,
                                    const std::vector<SparseVector>& lambda);

// Module-valued cocycle of an extension as one K-valued degree-2 cochain per module basis element.
std::vector<SparseVector> cocycle_components(const HarrisonComplex& c, const Extension& e);

}  // namespace codiff
