#include "codiff/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace codiff {

static constexpr std::size_t npos = static_cast<std::size_t>(-1);

ClassSpace::ClassSpace(const LieStructure& lie, std::vector<std::size_t> level, std::vector<std::size_t> source,
                       std::vector<std::size_t> target)
    : lie_(&lie), level_(std::move(level)), source_(std::move(source)), target_(std::move(target)) {
  const CochainSpace& cs = lie.cochains();
  std::sort(level_.begin(), level_.end());
  std::sort(source_.begin(), source_.end());
  std::sort(target_.begin(), target_.end());
  level_pos_.assign(cs.dim(), npos);
  for (std::size_t r = 0; r < level_.size(); ++r) level_pos_[level_[r]] = r;

  std::vector<std::size_t> all_cols = level_;
  all_cols.insert(all_cols.end(), source_.begin(), source_.end());
  lie.prepare_differentials(all_cols);

  struct Tagged {
    Class c;
    std::size_t order;
  };
  std::vector<Tagged> found;
  for (Parity p : {Parity::even, Parity::odd}) {
    std::vector<std::size_t> cols;
    for (std::size_t i : level_)
      if (cs.parity(i) == p) cols.push_back(i);
    if (cols.empty()) continue;
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return cs.weight(a) > cs.weight(b); });
    std::vector<std::size_t> tgt, src;
    for (std::size_t i : target_)
      if (cs.parity(i) == flip(p)) tgt.push_back(i);
    for (std::size_t i : source_)
      if (cs.parity(i) == flip(p)) src.push_back(i);

    // Kernel vectors, listed by increasing filtration degree.
    std::vector<Vector> kernel = kernel_basis(lie.differential_matrix(cols, tgt));
    std::reverse(kernel.begin(), kernel.end());
    std::vector<int> zdeg;
    std::vector<SparseVector> zvec;
    for (const auto& v : kernel) {
      SparseVector s = SparseVector::from_dense(v);
      std::size_t last = s.entries().back().first;
      zdeg.push_back(cs.weight(cols[last]));
      std::map<std::size_t, Rational> m;
      for (const auto& [k, x] : s) m[cols[k]] = x;
      zvec.push_back(SparseVector::from_map(m));
    }

    std::vector<Vector> image = image_basis(lie.differential_matrix(src, cols));
    Matrix zmat = Matrix::from_columns(kernel, cols.size());
    LinearSolver zsolve(zmat);
    EchelonBasis bz(kernel.size());
    for (const auto& b : image) {
      auto y = zsolve.solve(b);
      if (!y) throw std::logic_error("cohomology: a coboundary is not a cocycle (D^2 != 0)");
      bz.insert(SparseVector::from_dense(*y));
    }
    for (const auto& [piv, row] : bz.rows()) {
      std::map<std::size_t, Rational> m;
      for (const auto& [j, x] : row)
        for (const auto& [k, z] : zvec[j]) m[k] += x * z;
      coboundaries_.push_back(SparseVector::from_map(m));
      coboundary_degrees_.push_back(zdeg[piv]);
    }
    for (std::size_t j = 0; j < zvec.size(); ++j) {
      cocycles_.push_back(zvec[j]);
      cocycle_degrees_.push_back(zdeg[j]);
    }
    for (std::size_t j : bz.non_pivots()) found.push_back({{zvec[j], p, zdeg[j]}, found.size()});
  }
  std::stable_sort(found.begin(), found.end(), [](const Tagged& a, const Tagged& b) {
    if (a.c.degree != b.c.degree) return a.c.degree < b.c.degree;
    return bit(a.c.parity) < bit(b.c.parity);
  });
  for (auto& t : found) classes_.push_back(std::move(t.c));

  Matrix dsrc = lie.differential_matrix(source_, level_);
  std::vector<SparseVector> cols;
  for (const auto& c : classes_) cols.push_back(to_level(c.representative));
  std::vector<SparseVector> srccols;
  {
    Matrix t = dsrc.transpose();
    for (std::size_t s = 0; s < source_.size(); ++s) srccols.push_back(t.row(s));
  }
  cols.insert(cols.end(), srccols.begin(), srccols.end());
  decomposer_ = std::make_shared<LinearSolver>(Matrix::from_columns(cols, level_.size()));
  integrator_ = std::make_shared<LinearSolver>(dsrc);
}

SparseVector ClassSpace::to_level(const SparseVector& x) const {
  std::map<std::size_t, Rational> m;
  for (const auto& [i, v] : x) {
    if (i >= level_pos_.size() || level_pos_[i] == npos) throw std::invalid_argument("ClassSpace: vector outside the level");
    m[level_pos_[i]] = v;
  }
  return SparseVector::from_map(m);
}

bool ClassSpace::in_level(const SparseVector& x) const {
  for (const auto& [i, v] : x)
    if (i >= level_pos_.size() || level_pos_[i] == npos) return false;
  return true;
}

bool ClassSpace::is_cocycle(const SparseVector& x) const {
  if (!in_level(x)) return false;
  std::vector<bool> in_target(lie_->cochains().dim(), false);
  for (std::size_t t : target_) in_target[t] = true;
  for (const auto& [i, v] : lie_->differential(x))
    if (in_target[i]) return false;
  return true;
}

std::optional<ClassSpace::Decomposition> ClassSpace::decompose(const SparseVector& x) const {
  if (!in_level(x)) throw std::invalid_argument("ClassSpace::decompose: vector outside the level");
  if (!is_cocycle(x)) return std::nullopt;
  auto y = decomposer_->solve(to_level(x));
  if (!y) throw std::logic_error("ClassSpace::decompose: cocycle not spanned by representatives and coboundaries");
  Decomposition d;
  d.coordinates.assign(classes_.size(), Rational(0));
  std::map<std::size_t, Rational> prim;
  for (const auto& [k, v] : *y) {
    if (k < classes_.size()) d.coordinates[k] = v;
    else prim[source_[k - classes_.size()]] = v;
  }
  d.primitive = SparseVector::from_map(prim);
  return d;
}

std::optional<SparseVector> ClassSpace::primitive(const SparseVector& x) const {
  if (!in_level(x)) throw std::invalid_argument("ClassSpace::primitive: vector outside the level");
  auto y = integrator_->solve(to_level(x));
  if (!y) return std::nullopt;
  std::map<std::size_t, Rational> m;
  for (const auto& [k, v] : *y) m[source_[k]] = v;
  return SparseVector::from_map(m);
}

// ---------------------------------------------------------------- CohomologyReport

CohomologyReport::CohomologyReport(const LieStructure& lie, int max_weight) : lie_(&lie), max_weight_(max_weight) {
  const CochainSpace& cs = lie.cochains();
  if (max_weight < 1 || max_weight > cs.coalgebra().weight_cap())
    throw std::out_of_range("cohomology: max_weight must lie in 1..weight_cap");
  auto all = cs.select(1, max_weight);
  classes_ = std::make_shared<ClassSpace>(lie, all, all, all);
  for (int n = 1; n <= max_weight; ++n)
    for (Parity p : {Parity::even, Parity::odd}) {
      CohomologyDims d{n, p, 0, 0, 0};
      for (std::size_t k = 0; k < classes_->cocycles().size(); ++k)
        if (classes_->cocycle_degrees()[k] == n && cs.parity_of(classes_->cocycles()[k]) == p) ++d.cocycles;
      for (std::size_t k = 0; k < classes_->coboundaries().size(); ++k)
        if (classes_->coboundary_degrees()[k] == n && cs.parity_of(classes_->coboundaries()[k]) == p) ++d.coboundaries;
      for (const auto& c : classes_->classes())
        if (c.degree == n && c.parity == p) ++d.classes;
      dims_.push_back(d);
    }
}

const CohomologyDims& CohomologyReport::dims(int weight, Parity parity) const {
  for (const auto& d : dims_)
    if (d.weight == weight && d.parity == parity) return d;
  throw std::out_of_range("CohomologyReport::dims: weight outside the report");
}

Matrix cochain_matrix_of_D(const LieStructure& lie, int weight, Parity parity) {
  const CochainSpace& cs = lie.cochains();
  int cap = cs.coalgebra().weight_cap();
  if (weight < 1 || weight > cap) throw std::out_of_range("cochain_matrix_of_D: weight outside 1..weight_cap");
  return lie.differential_matrix(cs.select(weight, weight, parity), cs.select(weight, cap, flip(parity)));
}

CohomologyReport cohomology(const LieStructure& lie, int max_weight) { return CohomologyReport(lie, max_weight); }

Coderivation lift_mu(const CohomologyReport& report, std::size_t class_index) {
  if (class_index >= report.total_classes()) throw std::out_of_range("lift_mu: class index out of range");
  const auto& c = report.classes()[class_index];
  return report.lie().cochains().to_coderivation(c.representative, c.parity);
}

}  // namespace codiff
