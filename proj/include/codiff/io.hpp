#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codiff/cohomology.hpp"
#include "codiff/deform.hpp"
#include "codiff/versality.hpp"

namespace codiff {

enum class AlgebraKind { lie, assoc, linf, ainf };
std::string to_string(AlgebraKind k);
std::optional<AlgebraKind> parse_kind(const std::string& s);

// Named linear combination, kept in the order written.
using Combination = std::vector<std::pair<Rational, std::string>>;

// One multilinear part. For lie/assoc the inputs are elements of V and the
// output is the bracket/product; for linf/ainf everything lives on W = ΠV.
struct PartInput {
  int arity = 0;
  std::vector<std::string> inputs;
  Combination output;
  friend bool operator==(const PartInput&, const PartInput&) = default;
};

// A deformation to test against the miniversal one: parameters, relations and
// terms δ_m ⊗ m given as parts on W for monomials m in the parameters.
struct TargetInput {
  std::vector<Generator> parameters;
  int truncation = 2;  // monomials of this degree vanish
  std::vector<Polynomial> relations;
  std::vector<std::pair<Exponents, PartInput>> terms;
  friend bool operator==(const TargetInput&, const TargetInput&) = default;
};

struct AlgebraInput {
  AlgebraKind kind = AlgebraKind::lie;
  std::vector<BasisElement> basis;  // V
  std::vector<PartInput> parts;
  int weight_cap = 3;
  int order = 2;
  std::optional<TargetInput> target;
  friend bool operator==(const AlgebraInput&, const AlgebraInput&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// The input is a valid algebra presentation but d is not a codifferential.
class RejectedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraInput parse_input(const std::string& text);
std::string serialize(const AlgebraInput& input);

// d on S(W) or T(W) for the given cap; throws std::invalid_argument on inconsistent parts.
Coderivation build_codifferential(const AlgebraInput& input, int weight_cap);
// Throws RejectedInput naming the lowest failing weight of [d,d].
void require_codifferential(const Coderivation& d);

struct RunOptions {
  std::optional<int> weight_cap;
  std::optional<int> order;
  bool strict = false;
  bool even_parameters = false;
};

struct MiniversalReport {
  AlgebraInput input;
  RunOptions options;
  int weight_cap = 0;
  int order = 0;
  std::shared_ptr<const DeformationProblem> problem;
  std::vector<CohomologyDims> cohomology;
  MiniversalDeformation miniversal;
  std::optional<VerifyResult> verify;
  std::shared_ptr<const Deformation> target;
};

MiniversalReport run(const AlgebraInput& input, const RunOptions& options);
// Adds the relative check against input.target (which must be present).
MiniversalReport run_verify(const AlgebraInput& input, const RunOptions& options);

std::vector<CohomologyDims> cohomology_table(const AlgebraInput& input, const RunOptions& options);

std::string format_cohomology(const std::vector<CohomologyDims>& dims, bool machine);
std::string format_report(const MiniversalReport& report, bool machine);

// Element of a base algebra written in its basis labels, e.g. "2 t1 - 1/2 t1*t2".
std::string format_element(const BaseAlgebra& a, const SparseVector& x);
// Cochain written as parts on W, one "k: letters -> combination" entry per word.
std::vector<std::string> format_cochain(const CochainSpace& cs, const SparseVector& x);

}  // namespace codiff
