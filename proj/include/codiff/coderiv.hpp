#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "codiff/graded.hpp"
#include "codiff/linalg.hpp"

namespace codiff {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word budget from CODIFF_MAX_WORDS (default 200000).
std::size_t max_words_limit();

// Canonical words of a fixed length over a graded space.
class WordBasis {
 public:
  WordBasis(const GradedSpace& space, WordKind kind, int length);
  std::size_t size() const { return words_.size(); }
  const Letters& letters(std::size_t i) const { return words_.at(i); }
  Parity parity(std::size_t i) const { return parities_.at(i); }
  std::optional<std::size_t> index_of(const Letters& canonical) const;

 private:
  std::vector<Letters> words_;
  std::vector<Parity> parities_;
  std::map<Letters, std::size_t> index_;
};

// W together with the coalgebra kind and the weight cap N.
class Coalgebra {
 public:
  Coalgebra(GradedSpace space, WordKind kind, int weight_cap);
  const GradedSpace& space() const { return space_; }
  WordKind kind() const { return kind_; }
  int weight_cap() const { return cap_; }
  const WordBasis& words(int length) const;
  std::size_t total_words() const { return total_; }
  bool same_shape(const Coalgebra& o) const { return kind_ == o.kind_ && cap_ == o.cap_ && space_ == o.space_; }

 private:
  GradedSpace space_;
  WordKind kind_;
  int cap_;
  std::vector<WordBasis> words_;
  std::size_t total_ = 0;
};
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;
CoalgebraPtr make_coalgebra(GradedSpace space, WordKind kind, int weight_cap);

using WordSum = std::map<Letters, Rational>;

class MultilinearPart {
 public:
  MultilinearPart(WordKind kind, int arity, Parity parity) : kind_(kind), arity_(arity), parity_(parity) {}

  WordKind kind() const { return kind_; }
  int arity() const { return arity_; }
  Parity parity() const { return parity_; }
  const std::map<Letters, SparseVector>& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  // Adds value at the (possibly non-canonical) word.
  void add(const Letters& word, const SparseVector& value, const GradedSpace& space);
  SparseVector apply(const Letters& word, const GradedSpace& space) const;

  friend bool operator==(const MultilinearPart& a, const MultilinearPart& b) {
    return a.kind_ == b.kind_ && a.arity_ == b.arity_ && a.parity_ == b.parity_ && a.table_ == b.table_;
  }

 private:
  WordKind kind_;
  int arity_;
  Parity parity_;
  std::map<Letters, SparseVector> table_;
};

class Coderivation {
 public:
  Coderivation(CoalgebraPtr coalgebra, Parity parity);

  const Coalgebra& coalgebra() const { return *coalgebra_; }
  const CoalgebraPtr& coalgebra_ptr() const { return coalgebra_; }
  const GradedSpace& space() const { return coalgebra_->space(); }
  WordKind kind() const { return coalgebra_->kind(); }
  int weight_cap() const { return coalgebra_->weight_cap(); }
  Parity parity() const { return parity_; }

  const MultilinearPart& part(int arity) const;
  void add(int arity, const Letters& word, const SparseVector& value);
  void add_part(const MultilinearPart& p, const Rational& scale = 1);
  SparseVector apply(const Letters& word) const;

  bool is_zero() const;
  std::vector<int> nonzero_arities() const;
  Coderivation scaled(const Rational& s) const;
  Coderivation& operator+=(const Coderivation& o);
  Coderivation& operator-=(const Coderivation& o);
  // Same parts viewed with another weight cap (higher arities dropped when shrinking).
  Coderivation recapped(const CoalgebraPtr& target) const;

  friend bool operator==(const Coderivation& a, const Coderivation& b);

 private:
  void check_compatible(const Coderivation& o) const;

  CoalgebraPtr coalgebra_;
  Parity parity_;
  std::vector<MultilinearPart> parts_;
};

// Value of the extended coderivation on a word of S(W) or T(W).
WordSum evaluate(const Coderivation& c, const Word& word);
// Arity-one output of [a, b] on one word; building block of the bracket kernels.
SparseVector bracket_entry(const Coderivation& a, const Coderivation& b, const Letters& word);

Coderivation bracket(const Coderivation& a, const Coderivation& b);
bool is_codifferential(const Coderivation& d);
// Lowest arity at which [d,d] fails to vanish.
std::optional<int> codifferential_defect(const Coderivation& d);
Coderivation big_d(const Coderivation& d, const Coderivation& phi);
const MultilinearPart& weight_component(const Coderivation& c, int n);

}  // namespace codiff
