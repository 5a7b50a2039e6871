#include "codiff/basealg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace codiff {

int degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int weighted_order(const Exponents& e, const std::vector<Generator>& gens) {
  int o = 0;
  for (std::size_t i = 0; i < e.size(); ++i) o += e[i] * gens[i].order;
  return o;
}

Parity monomial_parity(const Exponents& e, const std::vector<Generator>& gens) {
  Parity p = Parity::even;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] % 2) p = p + gens[i].parity;
  return p;
}

std::optional<std::pair<int, Exponents>> multiply_monomials(const Exponents& a, const Exponents& b,
                                                            const std::vector<Generator>& gens) {
  Exponents c(a.size());
  int swaps = 0;
  int odd_in_a_after = 0;  // odd letters of a with index > j, counted from the right
  for (std::size_t i = a.size(); i-- > 0;) {
    c[i] = a[i] + b[i];
    if (gens[i].parity == Parity::odd) {
      if (c[i] > 1) return std::nullopt;
      if (b[i]) swaps += odd_in_a_after;
      if (a[i]) ++odd_in_a_after;
    }
  }
  return std::make_pair(swaps % 2 ? -1 : 1, c);
}

bool monomial_less(const Exponents& a, const Exponents& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a > b;
}

std::vector<Exponents> free_monomials(const std::vector<Generator>& gens, int max_degree) {
  std::vector<Exponents> out;
  Exponents cur(gens.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == gens.size()) {
      if (degree(cur) > 0) out.push_back(cur);
      return;
    }
    int cap = gens[i].parity == Parity::odd ? std::min(1, left) : left;
    for (int x = 0; x <= cap; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
    cur[i] = 0;
  };
  if (max_degree > 0) rec(0, max_degree);
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

std::string monomial_label(const Exponents& e, const std::vector<Generator>& gens) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += gens[i].name;
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p, const std::vector<Generator>& gens) {
  std::vector<std::pair<Exponents, Rational>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  std::string s;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    Rational a = abs(c);
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (a != 1 || degree(e) == 0) s += to_string(a) + (degree(e) ? " " : "");
    if (degree(e)) s += monomial_label(e, gens);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- BaseAlgebra

BaseAlgebra::BaseAlgebra(std::vector<Generator> gens, std::vector<SparseVector> generator_elements,
                         std::vector<Element> basis, ProductRows products)
    : gens_(std::move(gens)), gen_elems_(std::move(generator_elements)), basis_(std::move(basis)), rows_(std::move(products)) {
  if (gens_.size() != gen_elems_.size()) throw std::invalid_argument("BaseAlgebra: one element per generator expected");
  if (rows_.size() != basis_.size()) throw std::invalid_argument("BaseAlgebra: product table has the wrong size");
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [j, v] : row) {
      if (j >= basis_.size()) throw std::invalid_argument("BaseAlgebra: product index out of range");
      for (const auto& [k, x] : v)
        if (k >= basis_.size()) throw std::invalid_argument("BaseAlgebra: product value out of range");
    }
  }
  for (const auto& g : gen_elems_)
    for (const auto& [k, x] : g)
      if (k >= basis_.size()) throw std::invalid_argument("BaseAlgebra: generator element out of range");
}

const SparseVector& BaseAlgebra::product(std::size_t i, std::size_t j) const {
  static const SparseVector zero;
  const auto& row = rows_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != j) return zero;
  return it->second;
}

SparseVector BaseAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const SparseVector& p = product(i, j);
      if (p.empty()) continue;
      Rational xy = x * y;
      for (const auto& [k, z] : p) acc[k] += xy * z;
    }
  return SparseVector::from_map(acc);
}

std::optional<Parity> BaseAlgebra::parity_of(const SparseVector& x) const {
  std::optional<Parity> p;
  for (const auto& [i, v] : x) {
    if (p && *p != parity(i)) throw std::invalid_argument("BaseAlgebra: element of mixed parity");
    p = parity(i);
  }
  return p;
}

SparseVector BaseAlgebra::monomial_value(const Exponents& e) const {
  if (e.size() != gens_.size()) throw std::invalid_argument("monomial_value: exponent vector has the wrong length");
  if (degree(e) == 0) throw std::invalid_argument("monomial_value: the unit is not an element of m");
  std::optional<SparseVector> acc;
  for (std::size_t g = 0; g < e.size(); ++g)
    for (int r = 0; r < e[g]; ++r) acc = acc ? multiply(*acc, gen_elems_[g]) : gen_elems_[g];
  return *acc;
}

SparseVector BaseAlgebra::evaluate(const Polynomial& p) const {
  SparseVector out;
  for (const auto& [e, c] : p) {
    if (c == 0) continue;
    out.add_scaled(monomial_value(e), c);
  }
  return out;
}

void BaseAlgebra::compute_expressions() const {
  if (expressions_.size() == basis_.size()) return;
  std::vector<Polynomial> out(basis_.size());
  bool all_monomial = true;
  for (const auto& b : basis_) all_monomial = all_monomial && b.monomial.has_value();
  if (all_monomial) {
    for (std::size_t i = 0; i < basis_.size(); ++i) out[i][*basis_[i].monomial] = 1;
  } else {
    auto monos = free_monomials(gens_, std::max(nilpotency() - 1, 0));
    std::vector<SparseVector> cols;
    for (const auto& m : monos) cols.push_back(monomial_value(m));
    LinearSolver solver(Matrix::from_columns(cols, dim()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      auto y = solver.solve(SparseVector::unit(i));
      if (!y) throw std::logic_error("BaseAlgebra: generators do not generate m");
      for (const auto& [k, c] : *y) out[i][monos[k]] = c;
    }
  }
  expressions_ = std::move(out);
}

const Polynomial& BaseAlgebra::expression(std::size_t i) const {
  compute_expressions();
  return expressions_.at(i);
}

EchelonBasis BaseAlgebra::power(int n) const {
  if (n < 1) throw std::invalid_argument("BaseAlgebra::power: n must be positive");
  if (powers_.empty()) {
    EchelonBasis cur(dim());
    for (std::size_t i = 0; i < dim(); ++i) cur.insert(SparseVector::unit(i));
    powers_.push_back(cur);
    while (powers_.back().rank() > 0) {
      EchelonBasis next(dim());
      for (const auto& [p, row] : powers_.back().rows())
        for (std::size_t j = 0; j < dim(); ++j) next.insert(multiply(row, SparseVector::unit(j)));
      powers_.push_back(std::move(next));
    }
  }
  if (static_cast<std::size_t>(n) > powers_.size()) return EchelonBasis(dim());
  return powers_[n - 1];
}

int BaseAlgebra::nilpotency() const {
  power(1);
  return static_cast<int>(powers_.size());
}

int BaseAlgebra::filtration_level(const SparseVector& x) const {
  int nil = nilpotency();
  if (x.empty()) return nil;
  int n = 1;
  while (n + 1 < nil && power(n + 1).contains(x)) ++n;
  return n;
}

std::vector<std::size_t> BaseAlgebra::cotangent_indices() const {
  if (dim() == 0) return {};
  return power(2).non_pivots();
}

Vector BaseAlgebra::cotangent_coordinates(const SparseVector& x) const {
  EchelonBasis sq = power(2);
  SparseVector r = sq.reduce(x);
  auto idx = sq.non_pivots();
  Vector out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = r.at(idx[k]);
  return out;
}

std::vector<Polynomial> BaseAlgebra::ideal_generators() const { return ideal_generators(nilpotency() + 1); }

std::vector<Polynomial> BaseAlgebra::ideal_generators(int truncation) const {
  if (truncation < nilpotency()) throw std::invalid_argument("ideal_generators: truncation below the nilpotency degree");
  const int top = truncation - 1;
  auto monos = free_monomials(gens_, top);
  std::map<Exponents, std::size_t> pos;
  for (std::size_t k = 0; k < monos.size(); ++k) pos[monos[k]] = k;
  std::vector<SparseVector> cols;
  for (const auto& m : monos) cols.push_back(monomial_value(m));
  auto kernel = kernel_basis(Matrix::from_columns(cols, dim()));
  // m·J inside the truncated free algebra
  auto times_generator = [&](const SparseVector& v, std::size_t g) {
    SparseVector out;
    Exponents eg(gens_.size(), 0);
    eg[g] = 1;
    for (const auto& [k, c] : v) {
      auto prod = multiply_monomials(eg, monos[k], gens_);
      if (!prod || degree(prod->second) > top) continue;
      out.add(pos.at(prod->second), c * prod->first);
    }
    return out;
  };
  EchelonBasis ideal(monos.size());
  for (const auto& v : kernel) ideal.insert(SparseVector::from_dense(v));
  EchelonBasis mj(monos.size());
  for (const auto& [p, row] : ideal.rows())
    for (std::size_t g = 0; g < gens_.size(); ++g) mj.insert(times_generator(row, g));
  std::vector<Polynomial> out;
  for (const auto& [p, row] : ideal.rows()) {
    if (!mj.insert(row)) continue;
    Polynomial poly;
    for (const auto& [k, c] : row) poly[monos[k]] = c;
    out.push_back(poly);
  }
  return out;
}

std::vector<std::string> BaseAlgebra::invariant_violations() const {
  std::vector<std::string> out;
  auto lbl = [&](std::size_t i) { return basis_[i].label; };
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      const SparseVector& p = product(i, j);
      if (p.empty()) continue;
      if (product(j, i) != p.scaled(sign_of(parity(i), parity(j))))
        out.push_back("not graded commutative at " + lbl(i) + ", " + lbl(j));
      for (const auto& [k, c] : p) {
        if (parity(k) != parity(i) + parity(j)) out.push_back("parity of " + lbl(i) + "*" + lbl(j));
        if (order(k) < order(i) + order(j)) out.push_back("order of " + lbl(i) + "*" + lbl(j));
      }
    }
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (product(i, j).empty()) continue;
      for (std::size_t k = 0; k < dim(); ++k) {
        SparseVector ek = SparseVector::unit(k);
        SparseVector lhs = multiply(product(i, j), ek);
        SparseVector rhs = multiply(SparseVector::unit(i), product(j, k));
        if (lhs != rhs) out.push_back("not associative at " + lbl(i) + ", " + lbl(j) + ", " + lbl(k));
      }
    }
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    try {
      auto p = parity_of(gen_elems_[g]);
      if (p && *p != gens_[g].parity) out.push_back("generator " + gens_[g].name + " has the wrong parity");
    } catch (const std::invalid_argument&) {
      out.push_back("generator " + gens_[g].name + " is not homogeneous");
    }
  }
  if (out.empty()) {
    EchelonBasis span(dim());
    std::vector<SparseVector> frontier = gen_elems_;
    for (const auto& g : gen_elems_) span.insert(g);
    while (!frontier.empty()) {
      std::vector<SparseVector> next;
      for (const auto& f : frontier)
        for (const auto& g : gen_elems_) {
          SparseVector p = multiply(f, g);
          if (span.insert(p)) next.push_back(p);
        }
      frontier = std::move(next);
    }
    if (span.rank() != dim()) out.push_back("generators do not generate m");
  }
  return out;
}

// ---------------------------------------------------------------- morphisms

AlgebraMorphism::AlgebraMorphism(const BaseAlgebra& source, const BaseAlgebra& target, std::vector<SparseVector> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  if (images_.size() != source.dim()) throw std::invalid_argument("AlgebraMorphism: one image per basis element expected");
  for (const auto& v : images_)
    for (const auto& [k, c] : v)
      if (k >= target.dim()) throw std::invalid_argument("AlgebraMorphism: image outside the target");
}

AlgebraMorphism AlgebraMorphism::from_generators(const BaseAlgebra& source, const BaseAlgebra& target,
                                                 const std::vector<SparseVector>& generator_images) {
  if (generator_images.size() != source.generators().size())
    throw std::invalid_argument("AlgebraMorphism: one image per generator expected");
  std::vector<SparseVector> images(source.dim());
  std::map<Exponents, SparseVector> cache;
  auto value = [&](const Exponents& e) -> const SparseVector& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    std::optional<SparseVector> acc;
    for (std::size_t g = 0; g < e.size(); ++g)
      for (int r = 0; r < e[g]; ++r) acc = acc ? target.multiply(*acc, generator_images[g]) : generator_images[g];
    return cache[e] = *acc;
  };
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (const auto& [e, c] : source.expression(i)) images[i].add_scaled(value(e), c);
  return AlgebraMorphism(source, target, std::move(images));
}

AlgebraMorphism AlgebraMorphism::identity(const BaseAlgebra& a) {
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(SparseVector::unit(i));
  return AlgebraMorphism(a, a, std::move(images));
}

AlgebraMorphism AlgebraMorphism::augmentation(const BaseAlgebra& a) {
  static const BaseAlgebra ground;
  return AlgebraMorphism(a, ground, std::vector<SparseVector>(a.dim()));
}

SparseVector AlgebraMorphism::apply(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [i, c] : x) out.add_scaled(images_.at(i), c);
  return out;
}

AlgebraMorphism AlgebraMorphism::then(const AlgebraMorphism& next) const {
  if (&next.source() != target_) throw std::invalid_argument("AlgebraMorphism::then: morphisms do not compose");
  std::vector<SparseVector> images;
  for (const auto& v : images_) images.push_back(next.apply(v));
  return AlgebraMorphism(*source_, next.target(), std::move(images));
}

std::vector<std::string> AlgebraMorphism::violations() const {
  std::vector<std::string> out;
  const BaseAlgebra& s = *source_;
  const BaseAlgebra& t = *target_;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    try {
      auto p = t.parity_of(images_[i]);
      if (p && *p != s.parity(i)) out.push_back("parity not preserved at " + s.element(i).label);
    } catch (const std::invalid_argument&) {
      out.push_back("image of " + s.element(i).label + " is not homogeneous");
    }
  }
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (apply(s.product(i, j)) != t.multiply(images_[i], images_[j]))
        out.push_back("not multiplicative at " + s.element(i).label + ", " + s.element(j).label);
  return out;
}

bool AlgebraMorphism::is_bijective() const {
  if (source_->dim() != target_->dim()) return false;
  return rank(Matrix::from_columns(images_, target_->dim())) == source_->dim();
}

// ---------------------------------------------------------------- constructions

BaseAlgebra free_truncated(const std::vector<Generator>& gens, int k) {
  if (k < 1) throw std::invalid_argument("free_truncated: k must be at least 1");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].order < 1) throw std::invalid_argument("free_truncated: generator orders must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (gens[j].name == gens[i].name) throw std::invalid_argument("free_truncated: duplicate generator " + gens[i].name);
  }
  auto monos = free_monomials(gens, k - 1);
  std::map<Exponents, std::size_t> pos;
  std::vector<BaseAlgebra::Element> basis;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    pos[monos[i]] = i;
    basis.push_back({monomial_label(monos[i], gens), monomial_parity(monos[i], gens), weighted_order(monos[i], gens), monos[i]});
  }
  BaseAlgebra::ProductRows rows(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if (degree(monos[i]) + degree(monos[j]) >= k) continue;
      auto p = multiply_monomials(monos[i], monos[j], gens);
      if (!p) continue;
      SparseVector v;
      v.add(pos.at(p->second), p->first);
      rows[i].emplace_back(j, v);
    }
  std::vector<SparseVector> gen_elems(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Exponents e(gens.size(), 0);
    e[g] = 1;
    if (pos.count(e)) gen_elems[g] = SparseVector::unit(pos.at(e));
  }
  return BaseAlgebra(gens, gen_elems, basis, rows);
}

Quotient quotient(const BaseAlgebra& a, const std::vector<SparseVector>& ideal_generators, bool require_square) {
  EchelonBasis square = require_square ? a.power(2) : EchelonBasis(a.dim());
  EchelonBasis ideal(a.dim());
  std::vector<SparseVector> frontier;
  for (const auto& x : ideal_generators) {
    if (require_square && !square.contains(x)) throw std::invalid_argument("quotient: relation not contained in m^2");
    if (ideal.insert(x)) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    std::vector<SparseVector> next;
    for (const auto& f : frontier)
      for (std::size_t g = 0; g < a.generators().size(); ++g) {
        SparseVector p = a.multiply(f, a.generator_element(g));
        if (ideal.insert(p)) next.push_back(p);
      }
    frontier = std::move(next);
  }
  auto keep = ideal.non_pivots();
  std::vector<std::size_t> new_index(a.dim(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < keep.size(); ++k) new_index[keep[k]] = k;
  auto project = [&](const SparseVector& x) {
    SparseVector r = ideal.reduce(x);
    SparseVector out;
    for (const auto& [i, c] : r) out.add(new_index[i], c);
    return out;
  };
  std::vector<BaseAlgebra::Element> basis;
  for (std::size_t k : keep) basis.push_back(a.element(k));
  BaseAlgebra::ProductRows rows(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      const SparseVector& p = a.product(keep[i], keep[j]);
      if (p.empty()) continue;
      SparseVector v = project(p);
      if (!v.empty()) rows[i].emplace_back(j, v);
    }
  std::vector<SparseVector> gen_elems;
  for (std::size_t g = 0; g < a.generators().size(); ++g) gen_elems.push_back(project(a.generator_element(g)));
  Quotient q{BaseAlgebra(a.generators(), gen_elems, basis, rows), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) q.projection.push_back(project(SparseVector::unit(i)));
  return q;
}

BaseAlgebra presented(const std::vector<Generator>& gens, int k, const std::vector<Polynomial>& relations,
                      bool require_square) {
  BaseAlgebra f = free_truncated(gens, k);
  std::vector<SparseVector> elems;
  for (const auto& r : relations) {
    Polynomial kept;
    for (const auto& [e, c] : r)
      if (degree(e) == 0) {
        if (c != 0) throw std::invalid_argument("presented: relations must not have a constant term");
      } else if (degree(e) < k) {
        kept[e] = c;
      }
    elems.push_back(f.evaluate(kept));
  }
  return quotient(f, elems, require_square).algebra;
}

std::vector<SparseVector> Extension::projection() const {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < algebra.dim(); ++i) out.push_back(i < base_dim ? SparseVector::unit(i) : SparseVector());
  return out;
}

Extension infinitesimal_extension(const BaseAlgebra& a, const std::vector<Parity>& module_parities,
                                  const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& cocycle,
                                  const std::string& module_prefix) {
  const std::size_t n = a.dim(), r = module_parities.size();
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> full;
  for (const auto& [key, v] : cocycle) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw std::invalid_argument("infinitesimal_extension: cocycle index out of range");
    for (const auto& [k, c] : v) {
      if (k >= r) throw std::invalid_argument("infinitesimal_extension: cocycle value outside the module");
      if (module_parities[k] != a.parity(i) + a.parity(j))
        throw std::invalid_argument("infinitesimal_extension: cocycle is not even");
    }
    SparseVector sym = v.scaled(sign_of(a.parity(i), a.parity(j)));
    auto set = [&](std::pair<std::size_t, std::size_t> k, const SparseVector& x) {
      auto it = full.find(k);
      if (it != full.end() && it->second != x)
        throw std::invalid_argument("infinitesimal_extension: cocycle is not graded symmetric");
      full[k] = x;
    };
    set({i, j}, v);
    set({j, i}, sym);
  }
  int top_order = 1;
  for (const auto& e : a.basis()) top_order = std::max(top_order, e.order + 1);
  std::vector<BaseAlgebra::Element> basis = a.basis();
  for (std::size_t k = 0; k < r; ++k)
    basis.push_back({module_prefix + std::to_string(k + 1), module_parities[k], top_order, std::nullopt});
  BaseAlgebra::ProductRows rows(n + r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector v = a.product(i, j);
      auto it = full.find({i, j});
      if (it != full.end())
        for (const auto& [k, c] : it->second) v.add(n + k, c);
      if (!v.empty()) rows[i].emplace_back(j, v);
    }
  // the module parts of products of A-elements never change which elements generate
  std::vector<Generator> gens = a.generators();
  std::vector<SparseVector> gen_elems;
  for (std::size_t g = 0; g < gens.size(); ++g) gen_elems.push_back(a.generator_element(g));
  BaseAlgebra draft(gens, gen_elems, basis, rows);
  // Lifts of generators: the section a -> (0,a) is not multiplicative, so check
  // generation on the new algebra and add module elements that are missing.
  EchelonBasis span(n + r);
  {
    std::vector<SparseVector> frontier = gen_elems;
    for (const auto& g : gen_elems) span.insert(g);
    while (!frontier.empty()) {
      std::vector<SparseVector> next;
      for (const auto& f : frontier)
        for (const auto& g : gen_elems) {
          SparseVector p = draft.multiply(f, g);
          if (span.insert(p)) next.push_back(p);
        }
      frontier = std::move(next);
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    SparseVector e = SparseVector::unit(n + k);
    if (span.insert(e)) {
      gens.push_back({module_prefix + std::to_string(k + 1), module_parities[k], top_order});
      gen_elems.push_back(e);
    }
  }
  Extension ext{BaseAlgebra(gens, gen_elems, basis, rows), n, module_parities, cocycle};
  for (const auto& v : ext.algebra.invariant_violations())
    if (v.rfind("not associative", 0) == 0)
      throw std::invalid_argument("infinitesimal_extension: cocycle condition fails (" + v + ")");
  return ext;
}

}  // namespace codiff
