#include "codiff/harrison.hpp"

#include <stdexcept>

namespace codiff {

HarrisonComplex::HarrisonComplex(const BaseAlgebra& a) : a_(&a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (i == j && a.parity(i) == Parity::odd) continue;
      pair_index_[{i, j}] = pairs_.size();
      pairs_.emplace_back(i, j);
    }
}

Rational HarrisonComplex::value2(const SparseVector& phi, std::size_t i, std::size_t j) const {
  if (i == j && a_->parity(i) == Parity::odd) return 0;
  if (i <= j) return phi.at(pair_index_.at({i, j}));
  return phi.at(pair_index_.at({j, i})) * sign_of(a_->parity(i), a_->parity(j));
}

SparseVector HarrisonComplex::from_pairs(const std::map<std::pair<std::size_t, std::size_t>, Rational>& values) const {
  std::map<std::size_t, Rational> m;
  std::map<std::size_t, Rational> seen;
  for (const auto& [key, v] : values) {
    auto [i, j] = key;
    if (i >= a_->dim() || j >= a_->dim()) throw std::invalid_argument("Harrison cochain: index out of range");
    if (i == j && a_->parity(i) == Parity::odd) {
      if (v != 0) throw std::invalid_argument("Harrison cochain: odd diagonal values must vanish");
      continue;
    }
    Rational canonical = i <= j ? v : v * sign_of(a_->parity(i), a_->parity(j));
    std::size_t k = pair_index_.at({std::min(i, j), std::max(i, j)});
    auto it = seen.find(k);
    if (it != seen.end() && it->second != canonical)
      throw std::invalid_argument("Harrison cochain: values are not graded symmetric");
    seen[k] = canonical;
    m[k] = canonical;
  }
  return SparseVector::from_map(m);
}

SparseVector HarrisonComplex::d1(const SparseVector& lambda) const {
  std::map<std::size_t, Rational> m;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    auto [i, j] = pairs_[k];
    Rational v = 0;
    for (const auto& [l, c] : a_->product(i, j)) v -= c * lambda.at(l);
    if (v != 0) m[k] = v;
  }
  return SparseVector::from_map(m);
}

SparseVector HarrisonComplex::d2(const SparseVector& phi) const {
  const std::size_t n = a_->dim();
  std::map<std::size_t, Rational> m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational v = 0;
        for (const auto& [l, c] : a_->product(i, j)) v -= c * value2(phi, l, k);
        for (const auto& [l, c] : a_->product(j, k)) v += c * value2(phi, i, l);
        if (v != 0) m[triple_index(i, j, k)] = v;
      }
  return SparseVector::from_map(m);
}

Matrix HarrisonComplex::d1_matrix() const {
  std::vector<SparseVector> cols;
  for (std::size_t i = 0; i < dim1(); ++i) cols.push_back(d1(SparseVector::unit(i)));
  return Matrix::from_columns(cols, dim2());
}

Matrix HarrisonComplex::d2_matrix() const {
  std::vector<SparseVector> cols;
  for (std::size_t k = 0; k < dim2(); ++k) cols.push_back(d2(SparseVector::unit(k)));
  return Matrix::from_columns(cols, dim3());
}

std::size_t HarrisonClasses::dim(Parity p) const {
  std::size_t n = 0;
  for (Parity q : parities) n += q == p;
  return n;
}

HarrisonClasses ha(const HarrisonComplex& c, int degree) {
  if (degree != 1 && degree != 2) throw std::invalid_argument("ha: only degrees 1 and 2 are available");
  HarrisonClasses out{degree, {}, {}, {}, {}};
  for (Parity p : {Parity::even, Parity::odd}) {
    std::vector<std::size_t> cols;
    std::size_t n = degree == 1 ? c.dim1() : c.dim2();
    for (std::size_t k = 0; k < n; ++k)
      if ((degree == 1 ? c.parity1(k) : c.parity2(k)) == p) cols.push_back(k);
    if (cols.empty()) continue;
    auto lift = [&](const Vector& v) {
      std::map<std::size_t, Rational> m;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) m[cols[k]] = v[k];
      return SparseVector::from_map(m);
    };
    std::vector<SparseVector> dcols;
    for (std::size_t k : cols)
      dcols.push_back(degree == 1 ? c.d1(SparseVector::unit(k)) : c.d2(SparseVector::unit(k)));
    auto kernel = kernel_basis(Matrix::from_columns(dcols, degree == 1 ? c.dim2() : c.dim3()));
    std::vector<Vector> image;
    if (degree == 2) {
      std::vector<SparseVector> bcols;
      for (std::size_t i = 0; i < c.dim1(); ++i)
        if (c.parity1(i) == p) {
          SparseVector b = c.d1(SparseVector::unit(i));
          Vector v(cols.size());
          for (std::size_t k = 0; k < cols.size(); ++k) v[k] = b.at(cols[k]);
          bcols.push_back(SparseVector::from_dense(v));
        }
      image = image_basis(Matrix::from_columns(bcols, cols.size()));
    }
    for (const auto& v : kernel) out.cocycles.push_back(lift(v));
    for (const auto& v : image) out.coboundaries.push_back(lift(v));
    // representatives: greedy standard vectors of Z-coordinates completing B
    LinearSolver zsolve(Matrix::from_columns(kernel, cols.size()));
    EchelonBasis bz(kernel.size());
    for (const auto& b : image) {
      auto y = zsolve.solve(b);
      if (!y) throw std::logic_error("ha: a coboundary is not a cocycle");
      bz.insert(SparseVector::from_dense(*y));
    }
    for (std::size_t j : bz.non_pivots()) {
      out.representatives.push_back(lift(kernel[j]));
      out.parities.push_back(p);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> ha_dims(const HarrisonComplex& c, int degree, const std::vector<Parity>& module_parities) {
  HarrisonClasses h = ha(c, degree);
  std::size_t even = 0, odd = 0;
  for (Parity q : module_parities)
    for (Parity p : h.parities) (p + q == Parity::even ? even : odd)++;
  return {even, odd};
}

UniversalExtension universal_infinitesimal_extension(const BaseAlgebra& a) {
  HarrisonComplex c(a);
  HarrisonClasses h = ha(c, 2);
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> cocycle;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      SparseVector v;
      for (std::size_t r = 0; r < h.dim(); ++r) {
        Rational x = c.value2(h.representatives[r], i, j);
        if (x != 0) v.add(r, h.parities[r] == Parity::odd ? -x : x);
      }
      if (!v.empty()) cocycle[{i, j}] = v;
    }
  return {infinitesimal_extension(a, h.parities, cocycle, "r"), h};
}

PresentedExtension universal_extension_by_presentation(const BaseAlgebra& a) {
  int nil = a.nilpotency();
  const auto& gens = a.generators();
  BaseAlgebra f = free_truncated(gens, nil + 1);
  PresentedExtension out{BaseAlgebra(), {}, a.ideal_generators(), {}};
  std::vector<SparseVector> mj;
  for (const auto& p : out.module_generators) {
    SparseVector pv = f.evaluate(p);
    for (std::size_t g = 0; g < gens.size(); ++g) mj.push_back(f.multiply(f.generator_element(g), pv));
  }
  Quotient q = quotient(f, mj, true);
  out.algebra = std::move(q.algebra);
  for (std::size_t i = 0; i < out.algebra.dim(); ++i) {
    const auto& e = out.algebra.element(i);
    if (!e.monomial) throw std::logic_error("universal_extension_by_presentation: non-monomial basis");
    out.projection.push_back(degree(*e.monomial) >= nil ? SparseVector() : a.monomial_value(*e.monomial));
  }
  for (const auto& p : out.module_generators) out.module_basis.push_back(out.algebra.evaluate(p));
  return out;
}

std::vector<SparseVector> cocycle_components(const HarrisonComplex& c, const Extension& e) {
  std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>> parts(e.module_parities.size());
  for (const auto& [key, v] : e.cocycle)
    for (const auto& [s, x] : v) parts[s][key] = x;
  std::vector<SparseVector> out;
  for (const auto& p : parts) out.push_back(c.from_pairs(p));
  return out;
}

AlgebraMorphism extend_morphism(const UniversalExtension& source, const Extension& target, const AlgebraMorphism& f) {
  const BaseAlgebra& a = f.source();
  const BaseAlgebra& b = source.extension.algebra;
  const BaseAlgebra& bt = target.algebra;
  if (source.extension.base_dim != a.dim()) throw std::invalid_argument("extend_morphism: source extension is over another algebra");
  if (target.base_dim != f.target().dim()) throw std::invalid_argument("extend_morphism: target extension is over another algebra");
  HarrisonComplex c(a);
  const HarrisonClasses& h = source.classes;
  const std::size_t nmod = target.module_parities.size();

  // pulled-back cocycle psi(x, y) = phi'(f x, f y), split into K-valued components
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> full;
  for (const auto& [key, v] : target.cocycle) {
    auto [i, j] = key;
    full[{i, j}] = v;
    full[{j, i}] = v.scaled(sign_of(f.target().parity(i), f.target().parity(j)));
  }
  std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>> psi(nmod);
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = x; y < a.dim(); ++y)
      for (const auto& [i, ci] : f.image(x))
        for (const auto& [j, cj] : f.image(y)) {
          auto it = full.find({i, j});
          if (it == full.end()) continue;
          for (const auto& [s, v] : it->second) psi[s][{x, y}] += ci * cj * v;
        }

  // psi_s = sum_j coeff_{s,j} rep_j + d1(lambda_s)
  std::vector<SparseVector> cols = h.representatives;
  for (std::size_t i = 0; i < c.dim1(); ++i) cols.push_back(c.d1(SparseVector::unit(i)));
  LinearSolver solver(Matrix::from_columns(cols, c.dim2()));
  std::vector<SparseVector> images(b.dim());
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (const auto& [i, ci] : f.image(x)) images[x].add(i, ci);
  for (std::size_t s = 0; s < nmod; ++s) {
    auto y = solver.solve(c.from_pairs(psi[s]));
    if (!y) throw std::logic_error("extend_morphism: pulled-back cocycle is not a Harrison cocycle");
    for (const auto& [k, v] : *y) {
      if (k < h.dim()) {
        Rational g = h.parities[k] == Parity::odd ? -v : v;
        images[a.dim() + k].add(target.base_dim + s, g);
      } else {
        images[k - h.dim()].add(target.base_dim + s, -v);
      }
    }
  }
  return AlgebraMorphism(b, bt, std::move(images));
}

AlgebraMorphism cocycle_equivalence(const Extension& shifted, const Extension& original,
                                    const std::vector<SparseVector>& lambda) {
  const std::size_t n = original.base_dim;
  if (shifted.base_dim != n || shifted.module_parities != original.module_parities || lambda.size() != n)
    throw std::invalid_argument("cocycle_equivalence: extensions do not match");
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < shifted.algebra.dim(); ++i) {
    SparseVector v = SparseVector::unit(i);
    if (i < n)
      for (const auto& [s, c] : lambda[i]) v.add(n + s, c);
    images.push_back(v);
  }
  return AlgebraMorphism(shifted.algebra, original.algebra, std::move(images));
}

}  // namespace codiff
