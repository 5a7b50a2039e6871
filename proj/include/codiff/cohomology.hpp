#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "codiff/cochains.hpp"

namespace codiff {

// Cohomology at one level of the complex: cocycles of `level` (D into `target`)
// modulo the image of `source`. Representatives follow the weight filtration:
// a class of filtration degree n is represented by a cocycle supported in weights ≥ n.
class ClassSpace {
 public:
  struct Class {
    SparseVector representative;  // cochain coordinates
    Parity parity;
    int degree;
  };
  struct Decomposition {
    Vector coordinates;      // one entry per class
    SparseVector primitive;  // cochain with x = Σ c_i rep_i + D(primitive)
  };

  ClassSpace(const LieStructure& lie, std::vector<std::size_t> level, std::vector<std::size_t> source,
             std::vector<std::size_t> target);

  std::size_t size() const { return classes_.size(); }
  const Class& operator[](std::size_t i) const { return classes_.at(i); }
  const std::vector<Class>& classes() const { return classes_; }
  const std::vector<SparseVector>& cocycles() const { return cocycles_; }
  const std::vector<int>& cocycle_degrees() const { return cocycle_degrees_; }
  const std::vector<SparseVector>& coboundaries() const { return coboundaries_; }
  const std::vector<int>& coboundary_degrees() const { return coboundary_degrees_; }
  const std::vector<std::size_t>& level() const { return level_; }

  bool in_level(const SparseVector& x) const;
  bool is_cocycle(const SparseVector& x) const;
  // nullopt when x is not a cocycle of this level.
  std::optional<Decomposition> decompose(const SparseVector& x) const;
  // Some y in `source` with D(y) = x, if x is exact.
  std::optional<SparseVector> primitive(const SparseVector& x) const;

 private:
  const LieStructure* lie_;
  std::vector<std::size_t> level_, source_, target_;
  std::vector<std::size_t> level_pos_;
  std::vector<Class> classes_;
  std::vector<SparseVector> cocycles_, coboundaries_;
  std::vector<int> cocycle_degrees_, coboundary_degrees_;
  std::shared_ptr<LinearSolver> decomposer_;
  std::shared_ptr<LinearSolver> integrator_;
  SparseVector to_level(const SparseVector& x) const;
};

struct CohomologyDims {
  int weight;
  Parity parity;
  std::size_t cocycles, coboundaries, classes;
};

class CohomologyReport {
 public:
  CohomologyReport(const LieStructure& lie, int max_weight);

  int max_weight() const { return max_weight_; }
  const ClassSpace& classes() const { return *classes_; }
  const std::vector<CohomologyDims>& dims() const { return dims_; }
  const CohomologyDims& dims(int weight, Parity parity) const;
  std::size_t total_classes() const { return classes_->size(); }
  const LieStructure& lie() const { return *lie_; }

 private:
  const LieStructure* lie_;
  int max_weight_;
  std::shared_ptr<ClassSpace> classes_;
  std::vector<CohomologyDims> dims_;
};

Matrix cochain_matrix_of_D(const LieStructure& lie, int weight, Parity parity);
CohomologyReport cohomology(const LieStructure& lie, int max_weight);
Coderivation lift_mu(const CohomologyReport& report, std::size_t class_index);

}  // namespace codiff
