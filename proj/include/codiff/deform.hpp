#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codiff/basealg.hpp"
#include "codiff/cohomology.hpp"

namespace codiff {

// An element of L ⊗ m: one cochain per basis element of m.
using Coefficients = std::vector<SparseVector>;

struct DeformationOptions {
  // Classical deformations of a Lie or associative product: coefficients of
  // weight 2, gauge of weight 1, obstructions of weight 3.
  bool strict = false;
  // Keep only parameters dual to classes of odd cochains (so every parameter is even).
  bool even_parameters = false;
};

// The differential graded Lie algebra of d together with the cochain levels and
// class spaces the deformation functor uses.
class DeformationProblem {
 public:
  explicit DeformationProblem(const Coderivation& d, DeformationOptions options = {});

  const DeformationOptions& options() const { return options_; }
  const LieStructure& lie() const { return *lie_; }
  const CochainSpace& cochains() const { return lie_->cochains(); }
  // Coordinates allowed in deformation coefficients, in gauge elements, and in obstructions.
  const std::vector<std::size_t>& coefficient_level() const { return coefficient_level_; }
  const std::vector<std::size_t>& gauge_level() const { return gauge_level_; }
  const ClassSpace& tangent() const { return *tangent_; }
  const ClassSpace& obstruction_space() const { return *obstructions_; }
  // Tangent classes that become parameters.
  const std::vector<std::size_t>& parameter_classes() const { return parameter_classes_; }
  // Basis of the gauge-level cocycles.
  const std::vector<SparseVector>& gauge_cocycles() const { return gauge_cocycles_; }

  bool in_coefficient_level(const SparseVector& x) const;
  bool in_gauge_level(const SparseVector& x) const;

 private:
  DeformationOptions options_;
  std::shared_ptr<LieStructure> lie_;
  std::vector<std::size_t> coefficient_level_, gauge_level_, obstruction_level_;
  std::vector<bool> in_coefficient_, in_gauge_;
  std::shared_ptr<ClassSpace> tangent_, obstructions_;
  std::vector<std::size_t> parameter_classes_;
  std::vector<SparseVector> gauge_cocycles_;
};

// d + δ with δ = Σ δ_i ⊗ e_i over the basis e_i of m.
struct Deformation {
  std::shared_ptr<const BaseAlgebra> base;
  Coefficients delta;
};

// Bracket on L ⊗ A: [x ⊗ a, y ⊗ b] = (-1)^{|a||y|} [x,y] ⊗ ab.
Coefficients tensor_bracket(const LieStructure& lie, const BaseAlgebra& base, const Coefficients& x, const Coefficients& y);
Coefficients tensor_differential(const LieStructure& lie, const Coefficients& x);
// D(δ) + ½[δ,δ]; zero exactly when d + δ is a codifferential over the base.
Coefficients mc_defect(const LieStructure& lie, const BaseAlgebra& base, const Coefficients& delta);
Coefficients mc_defect(const DeformationProblem& p, const Deformation& def);
bool is_zero(const Coefficients& x);
// δ' with d + δ' = exp(ad λ)(d + δ), for an even λ in L ⊗ m.
Coefficients gauge_action(const LieStructure& lie, const BaseAlgebra& base, const Coefficients& lambda, const Coefficients& delta);

// Human readable reasons why def is not a deformation for this problem (parity, level, MC).
std::vector<std::string> deformation_violations(const DeformationProblem& p, const Deformation& def);

// For an infinitesimal base: λ with δ1 - δ2 = D(λ), if the deformations are equivalent.
std::optional<Coefficients> infinitesimal_equivalence(const DeformationProblem& p, const Deformation& a, const Deformation& b);

// τ*(δ) over τ's target; `target` must own the algebra τ maps into.
Deformation push_out(const DeformationProblem& p, const Deformation& def, const AlgebraMorphism& tau,
                     std::shared_ptr<const BaseAlgebra> target);

// Parameter generators t1, t2, ... dual to the parameter classes (parity flipped,
// order = filtration degree of the class).
std::vector<Generator> parameter_generators(const DeformationProblem& p);
// d + Σ μ_i ⊗ t^i over K ⊕ span(t^i).
Deformation universal_infinitesimal(const DeformationProblem& p);

// Class coordinates (over tangent classes) of the order-one part of δ, one row per
// cotangent direction of the base.
std::vector<Vector> differential_of(const DeformationProblem& p, const Deformation& def);

struct ObstructionClass {
  std::vector<SparseVector> cocycles;  // γ component for each module basis element
  std::vector<Vector> classes;         // class coordinates over obstruction classes
  bool vanishes() const;
};
// Obstruction to lifting def to an infinitesimal extension of its base.
ObstructionClass obstruction(const DeformationProblem& p, const Deformation& def, const Extension& extension);

struct OrderStep {
  int order;                        // the base after this step has m^{order+1} = 0
  std::size_t module_dim;           // dim J/mJ of the universal extension
  std::size_t obstruction_rank;     // dim of the span of the obstruction components
  std::size_t corrected_components; // module directions that needed a correction term
  std::size_t base_dim;
};

// Truncated miniversal deformation: generators, relations and δ over
// K[t]/(relations, monomials of degree order+1).
struct MiniversalDeformation {
  std::vector<Generator> generators;
  std::vector<std::size_t> generator_classes;  // tangent class of each generator
  std::vector<Polynomial> relations;
  Deformation deformation;
  int order = 1;
  std::vector<OrderStep> steps;
};

MiniversalDeformation start_miniversal(const DeformationProblem& p);
// One step of the construction: order k to order k + 1.
MiniversalDeformation extend_deformation(const DeformationProblem& p, const MiniversalDeformation& current);
MiniversalDeformation miniversal(const DeformationProblem& p, int order);

}  // namespace codiff
