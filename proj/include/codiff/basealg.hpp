#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codiff/graded.hpp"
#include "codiff/linalg.hpp"

namespace codiff {

struct Generator {
  std::string name;
  Parity parity;
  int order = 1;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Exponent of each generator; odd generators never exceed 1.
using Exponents = std::vector<int>;
// Polynomial in the generators (graded commutative, canonical monomial order).
using Polynomial = std::map<Exponents, Rational>;

int degree(const Exponents& e);
int weighted_order(const Exponents& e, const std::vector<Generator>& gens);
Parity monomial_parity(const Exponents& e, const std::vector<Generator>& gens);
// x^a * x^b with the sign of moving odd generators into place; nullopt when it vanishes.
std::optional<std::pair<int, Exponents>> multiply_monomials(const Exponents& a, const Exponents& b,
                                                            const std::vector<Generator>& gens);
// Nonzero monomials of degree 1..max_degree, by degree and then by descending exponents.
std::vector<Exponents> free_monomials(const std::vector<Generator>& gens, int max_degree);
bool monomial_less(const Exponents& a, const Exponents& b);
std::string monomial_label(const Exponents& e, const std::vector<Generator>& gens);

// Augmented graded commutative algebra A = K + m with nilpotent m, given by a
// basis of m and its product table. The generators are elements of m that
// generate it as an algebra.
class BaseAlgebra {
 public:
  struct Element {
    std::string label;
    Parity parity;
    int order;
    std::optional<Exponents> monomial;  // set when the element is a standard monomial
  };
  using ProductRows = std::vector<std::vector<std::pair<std::size_t, SparseVector>>>;

  // The ground field: m = 0, no generators.
  BaseAlgebra() = default;
  BaseAlgebra(std::vector<Generator> gens, std::vector<SparseVector> generator_elements, std::vector<Element> basis,
              ProductRows products);

  std::size_t dim() const { return basis_.size(); }
  const Element& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<Element>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  int order(std::size_t i) const { return basis_.at(i).order; }

  const std::vector<Generator>& generators() const { return gens_; }
  const SparseVector& generator_element(std::size_t g) const { return gen_elems_.at(g); }

  const SparseVector& product(std::size_t i, std::size_t j) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  // Parity of a homogeneous element; nullopt for zero, throws when mixed.
  std::optional<Parity> parity_of(const SparseVector& x) const;

  SparseVector monomial_value(const Exponents& e) const;
  // Constant terms are not allowed.
  SparseVector evaluate(const Polynomial& p) const;
  // Basis element as a polynomial in the generators.
  const Polynomial& expression(std::size_t i) const;

  // Smallest k with m^k = 0.
  int nilpotency() const;
  bool is_infinitesimal() const { return nilpotency() <= 2; }
  // Span of m^n as a reduced echelon basis (n >= 1).
  EchelonBasis power(int n) const;
  // Largest n with x in m^n (nilpotency() for zero).
  int filtration_level(const SparseVector& x) const;
  // Basis indices whose classes form a basis of m/m^2, and the projection onto them.
  std::vector<std::size_t> cotangent_indices() const;
  Vector cotangent_coordinates(const SparseVector& x) const;

  // Ideal of relations in the free algebra truncated above the nilpotency degree,
  // listed as a minimal generating set (truncation monomials included).
  std::vector<Polynomial> ideal_generators() const;
  // Minimal generators of the kernel from the free algebra modulo monomials of
  // degree >= truncation (which must be at least the nilpotency degree).
  std::vector<Polynomial> ideal_generators(int truncation) const;

  // Human readable failures of commutativity, associativity, parity, order and generation.
  std::vector<std::string> invariant_violations() const;

 private:
  std::vector<Generator> gens_;
  std::vector<SparseVector> gen_elems_;
  std::vector<Element> basis_;
  ProductRows rows_;
  mutable std::vector<Polynomial> expressions_;
  mutable std::vector<EchelonBasis> powers_;  // m, m^2, ..., ending with the first zero power
  void compute_expressions() const;
};

// A K-algebra morphism, stored as the linear map on m.
class AlgebraMorphism {
 public:
  AlgebraMorphism(const BaseAlgebra& source, const BaseAlgebra& target, std::vector<SparseVector> images);
  // The morphism determined by generator images (elements of the target's m).
  static AlgebraMorphism from_generators(const BaseAlgebra& source, const BaseAlgebra& target,
                                         const std::vector<SparseVector>& generator_images);
  static AlgebraMorphism identity(const BaseAlgebra& a);
  static AlgebraMorphism augmentation(const BaseAlgebra& a);  // A -> K

  const BaseAlgebra& source() const { return *source_; }
  const BaseAlgebra& target() const { return *target_; }
  const SparseVector& image(std::size_t i) const { return images_.at(i); }
  const std::vector<SparseVector>& images() const { return images_; }
  SparseVector apply(const SparseVector& x) const;
  AlgebraMorphism then(const AlgebraMorphism& next) const;  // next ∘ this

  // Empty when the map is multiplicative, parity preserving and sends m into m.
  std::vector<std::string> violations() const;
  bool is_bijective() const;

 private:
  const BaseAlgebra* source_;
  const BaseAlgebra* target_;
  std::vector<SparseVector> images_;
};

// Free graded commutative algebra on the generators modulo monomials of degree >= k.
BaseAlgebra free_truncated(const std::vector<Generator>& gens, int k);

struct Quotient {
  BaseAlgebra algebra;
  std::vector<SparseVector> projection;  // image of each source basis element
};
// A / (ideal generated by the given elements of m). With require_square the
// generators must lie in m^2.
Quotient quotient(const BaseAlgebra& a, const std::vector<SparseVector>& ideal_generators, bool require_square = true);
// Quotient of the free truncated algebra by polynomial relations.
BaseAlgebra presented(const std::vector<Generator>& gens, int k, const std::vector<Polynomial>& relations,
                      bool require_square = true);

// Square-zero extension A + N with (n,a)(n',a') = (phi(a,a'), aa'). The module
// basis elements are appended after A's basis; phi maps basis pairs of A to N.
struct Extension {
  BaseAlgebra algebra;
  std::size_t base_dim = 0;  // A occupies indices [0, base_dim), N the rest
  std::vector<Parity> module_parities;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> cocycle;
  std::vector<SparseVector> projection() const;  // B -> A
};
Extension infinitesimal_extension(const BaseAlgebra& a, const std::vector<Parity>& module_parities,
                                  const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& cocycle,
                                  const std::string& module_prefix = "n");

std::string to_string(const Polynomial& p, const std::vector<Generator>& gens);

}  // namespace codiff
