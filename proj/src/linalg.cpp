#include "codiff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace codiff {

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) return std::nullopt;
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- SparseVector

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.entries_.emplace_back(i, v[i]);
  return s;
}

SparseVector SparseVector::unit(std::size_t i) {
  SparseVector s;
  s.entries_.emplace_back(i, Rational(1));
  return s;
}

SparseVector SparseVector::from_map(const std::map<std::size_t, Rational>& m) {
  SparseVector s;
  for (const auto& [i, v] : m)
    if (v != 0) s.entries_.emplace_back(i, v);
  return s;
}

Vector SparseVector::to_dense(std::size_t n) const {
  Vector v(n);
  for (const auto& [i, x] : entries_) {
    if (i >= n) throw std::out_of_range("SparseVector::to_dense: index beyond length");
    v[i] = x;
  }
  return v;
}

const Rational* SparseVector::find(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it == entries_.end() || it->first != i) return nullptr;
  return &it->second;
}

Rational SparseVector::at(std::size_t i) const {
  const Rational* p = find(i);
  return p ? *p : Rational(0);
}

std::optional<std::size_t> SparseVector::leading_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

void SparseVector::add(std::size_t i, const Rational& v) {
  if (v == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.emplace(it, i, v);
  }
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& s) {
  if (s == 0 || other.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = other.entries_.begin(), be = other.entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == ae || b->first < a->first) {
      out.emplace_back(b->first, b->second * s);
      ++b;
    } else {
      Rational v = a->second + b->second * s;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= s;
}

SparseVector SparseVector::scaled(const Rational& s) const {
  SparseVector out = *this;
  out.scale(s);
  return out;
}

SparseVector SparseVector::remapped(const std::vector<std::size_t>& new_index) const {
  std::map<std::size_t, Rational> m;
  for (const auto& [i, v] : entries_) m[new_index.at(i)] += v;
  return from_map(m);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), sparse_(rows) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    m.sparse_[r] = SparseVector::from_dense(rows[r]);
  }
  m.choose_storage();
  return m;
}

Matrix Matrix::from_columns(const std::vector<SparseVector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  std::vector<std::vector<SparseVector::Entry>> acc(rows);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) {
      if (r >= rows) throw std::out_of_range("Matrix::from_columns: row index out of range");
      acc[r].emplace_back(c, v);
    }
  for (std::size_t r = 0; r < rows; ++r) {
    std::map<std::size_t, Rational> row;
    for (auto& e : acc[r]) row[e.first] += e.second;
    m.sparse_[r] = SparseVector::from_map(row);
  }
  m.choose_storage();
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  std::vector<SparseVector> s;
  s.reserve(cols.size());
  for (const auto& c : cols) {
    if (c.size() != rows) throw std::invalid_argument("Matrix::from_columns: column length mismatch");
    s.push_back(SparseVector::from_dense(c));
  }
  return from_columns(s, rows);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.sparse_[i] = SparseVector::unit(i);
  m.choose_storage();
  return m;
}

void Matrix::choose_storage() {
  std::size_t total = rows_ * cols_;
  std::size_t nz = 0;
  for (const auto& r : sparse_) nz += r.nnz();
  bool dense = total > 0 && static_cast<double>(nz) >= dense_fill_threshold * static_cast<double>(total);
  if (dense) {
    dense_.assign(total, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : sparse_[r]) dense_[r * cols_ + c] = v;
    sparse_.clear();
    storage_ = Storage::dense;
  } else {
    storage_ = Storage::sparse;
  }
}

std::size_t Matrix::nonzeros() const {
  std::size_t nz = 0;
  if (storage_ == Storage::dense) {
    for (const auto& v : dense_)
      if (v != 0) ++nz;
  } else {
    for (const auto& r : sparse_) nz += r.nnz();
  }
  return nz;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at");
  if (storage_ == Storage::dense) return dense_[r * cols_ + c];
  return sparse_[r].at(c);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::set");
  if (storage_ == Storage::dense) {
    dense_[r * cols_ + c] = v;
    return;
  }
  Rational old = sparse_[r].at(c);
  sparse_[r].add(c, v - old);
}

SparseVector Matrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("Matrix::row");
  if (storage_ == Storage::sparse) return sparse_[r];
  SparseVector s;
  for (std::size_t c = 0; c < cols_; ++c)
    if (dense_[r * cols_ + c] != 0) s.add(c, dense_[r * cols_ + c]);
  return s;
}

std::vector<SparseVector> Matrix::sparse_rows() const {
  if (storage_ == Storage::sparse) return sparse_;
  std::vector<SparseVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Vector Matrix::multiply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::multiply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (storage_ == Storage::dense) {
      for (std::size_t c = 0; c < cols_; ++c) y[r] += dense_[r * cols_ + c] * x[c];
    } else {
      for (const auto& [c, v] : sparse_[r]) y[r] += v * x[c];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  std::vector<SparseVector> rows = sparse_rows();
  return from_columns(rows, cols_);
}

Matrix Matrix::negated() const {
  Matrix m = *this;
  for (auto& v : m.dense_) v = -v;
  for (auto& r : m.sparse_) r.scale(-1);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r)
    if (!(a.row(r) == b.row(r))) return false;
  return true;
}

// ---------------------------------------------------------------- EchelonBasis

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::vector<std::pair<std::size_t, Rational>> hits;
  for (const auto& [c, x] : v)
    if (rows_.count(c)) hits.emplace_back(c, x);
  // Pivot rows vanish on every other pivot column, so one pass suffices.
  for (const auto& [c, x] : hits) v.add_scaled(rows_.at(c), -x);
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  for (const auto& [c, x] : v)
    if (c >= dim_) throw std::out_of_range("EchelonBasis::insert: index beyond dimension");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  std::size_t p = *v.leading_index();
  v.scale(1 / Rational(v.entries().front().second));
  for (auto& [q, row] : rows_) {
    const Rational* x = row.find(p);
    if (x) {
      Rational s = -*x;
      row.add_scaled(v, s);
    }
  }
  rows_.emplace(p, std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& kv : rows_) out.push_back(kv.first);
  return out;
}

std::vector<std::size_t> EchelonBasis::non_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------- LinearSolver

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
  EchelonBasis e(cols_ + rows_);
  std::vector<SparseVector> rows = m.sparse_rows();
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector aug = rows[r];
    aug.add(cols_ + r, 1);
    e.insert(std::move(aug));
  }
  for (const auto& [p, row] : e.rows()) {
    SparseVector t;
    for (const auto& [c, v] : row)
      if (c >= cols_) t.add(c - cols_, v);
    if (p < cols_) {
      pivot_cols_.push_back(p);
      transform_.push_back(std::move(t));
    } else {
      conditions_.push_back(std::move(t));
    }
  }
}

std::optional<SparseVector> LinearSolver::solve(const SparseVector& b) const {
  auto dot = [&](const SparseVector& t) {
    Rational s = 0;
    auto i = t.begin(), j = b.begin();
    while (i != t.end() && j != b.end()) {
      if (i->first < j->first) ++i;
      else if (j->first < i->first) ++j;
      else { s += i->second * j->second; ++i; ++j; }
    }
    return s;
  };
  for (const auto& [i, v] : b)
    if (i >= rows_) throw std::invalid_argument("LinearSolver::solve: right-hand side too long");
  for (const auto& c : conditions_)
    if (dot(c) != 0) return std::nullopt;
  SparseVector x;
  for (std::size_t k = 0; k < pivot_cols_.size(); ++k) x.add(pivot_cols_[k], dot(transform_[k]));
  return x;
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: right-hand side length differs from row count");
  auto x = solve(SparseVector::from_dense(b));
  if (!x) return std::nullopt;
  return x->to_dense(cols_);
}

// ---------------------------------------------------------------- free functions

std::vector<Vector> kernel_basis(const Matrix& m) {
  EchelonBasis e(m.cols());
  for (auto& r : m.sparse_rows()) e.insert(std::move(r));
  std::vector<Vector> out;
  for (std::size_t f : e.non_pivots()) {
    Vector v(m.cols());
    v[f] = 1;
    for (const auto& [p, row] : e.rows()) v[p] = -row.at(f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> image_basis(const Matrix& m) {
  EchelonBasis e(m.cols());
  for (auto& r : m.sparse_rows()) e.insert(std::move(r));
  std::vector<Vector> out;
  for (std::size_t p : e.pivots()) {
    Vector col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, p);
    out.push_back(std::move(col));
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis e(m.cols());
  for (auto& r : m.sparse_rows()) e.insert(std::move(r));
  return e.rank();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length differs from row count");
  return LinearSolver(m).solve(b);
}

std::vector<Vector> quotient_representatives(std::size_t space_dim, const std::vector<Vector>& subspace) {
  EchelonBasis e(space_dim);
  for (const auto& v : subspace) {
    if (v.size() != space_dim) throw std::invalid_argument("quotient_representatives: vector length mismatch");
    e.insert(SparseVector::from_dense(v));
  }
  std::vector<Vector> out;
  for (std::size_t j : e.non_pivots()) {
    Vector v(space_dim);
    v[j] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace codiff
