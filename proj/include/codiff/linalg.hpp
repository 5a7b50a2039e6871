#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codiff {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& q);
// Accepts "p" or "p/q" with optional sign; rejects q = 0 and malformed text.
std::optional<Rational> parse_rational(const std::string& text);

// Sorted (index, value) pairs with no explicit zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector from_dense(const Vector& v);
  static SparseVector unit(std::size_t i);
  static SparseVector from_map(const std::map<std::size_t, Rational>& m);

  Vector to_dense(std::size_t n) const;
  Rational at(std::size_t i) const;
  const Rational* find(std::size_t i) const;
  std::optional<std::size_t> leading_index() const;

  void add(std::size_t i, const Rational& v);
  void add_scaled(const SparseVector& other, const Rational& s);
  void scale(const Rational& s);
  SparseVector scaled(const Rational& s) const;
  // Keeps entries whose index passes the predicate.
  template <typename Pred>
  SparseVector filtered(Pred keep) const {
    SparseVector out;
    for (const auto& e : entries_)
      if (keep(e.first)) out.entries_.push_back(e);
    return out;
  }
  SparseVector remapped(const std::vector<std::size_t>& new_index) const;

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  SparseVector& operator+=(const SparseVector& o) { add_scaled(o, 1); return *this; }
  SparseVector& operator-=(const SparseVector& o) { add_scaled(o, -1); return *this; }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

class Matrix {
 public:
  enum class Storage { dense, sparse };
  static constexpr double dense_fill_threshold = 0.25;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<SparseVector>& cols, std::size_t rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Storage storage() const { return storage_; }
  std::size_t nonzeros() const;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);

  SparseVector row(std::size_t r) const;
  std::vector<SparseVector> sparse_rows() const;
  Vector multiply(const Vector& x) const;
  Matrix transpose() const;
  Matrix negated() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void choose_storage();

  std::size_t rows_ = 0, cols_ = 0;
  Storage storage_ = Storage::sparse;
  std::vector<Rational> dense_;
  std::vector<SparseVector> sparse_;
};

// Row space kept in reduced row echelon form; pivot = leftmost nonzero column.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

  bool insert(SparseVector v);
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> non_pivots() const;
  bool is_pivot(std::size_t c) const { return rows_.count(c) != 0; }
  const SparseVector& row_for_pivot(std::size_t c) const { return rows_.at(c); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector> rows_;
};

// Repeated solves against one matrix; the particular solution has zeros in
// every free-variable position of the reduced echelon form.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& m);
  std::optional<Vector> solve(const Vector& b) const;
  std::optional<SparseVector> solve(const SparseVector& b) const;
  std::size_t rank() const { return pivot_cols_.size(); }

 private:
  std::size_t rows_, cols_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<SparseVector> transform_;   // row of T for each pivot, T·m = R
  std::vector<SparseVector> conditions_;  // left kernel rows
};

std::vector<Vector> kernel_basis(const Matrix& m);
std::vector<Vector> image_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::vector<Vector> quotient_representatives(std::size_t space_dim, const std::vector<Vector>& subspace);

}  // namespace codiff
