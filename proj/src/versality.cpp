#include "codiff/versality.hpp"

#include <map>
#include <stdexcept>

namespace codiff {

namespace {

Coefficients pull(const Coefficients& x, const std::vector<SparseVector>& images, std::size_t target_dim) {
  Coefficients out(target_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].empty()) continue;
    for (const auto& [j, c] : images[i]) out[j].add_scaled(x[i], c);
  }
  return out;
}

SparseVector part_of_parity(const SparseVector& x, const BaseAlgebra& a, Parity p) {
  return x.filtered([&](std::size_t i) { return a.parity(i) == p; });
}

// Coordinates of elements of m' in the filtration basis, split by level.
class Adapted {
 public:
  explicit Adapted(const BaseAlgebra& a) : levels_(filtration_basis(a)) {
    std::vector<SparseVector> cols;
    for (std::size_t n = 0; n < levels_.size(); ++n)
      for (std::size_t b = 0; b < levels_[n].size(); ++b) {
        cols.push_back(levels_[n][b]);
        where_.push_back({n + 1, b});
      }
    solver_ = std::make_unique<LinearSolver>(Matrix::from_columns(cols, a.dim()));
  }

  const std::vector<std::vector<SparseVector>>& levels() const { return levels_; }
  int depth() const { return static_cast<int>(levels_.size()); }

  // (level, index within level) -> coefficient
  std::map<std::pair<int, std::size_t>, Rational> coordinates(const SparseVector& x) const {
    std::map<std::pair<int, std::size_t>, Rational> out;
    if (x.empty()) return out;
    auto y = solver_->solve(x);
    if (!y) throw std::logic_error("filtration basis does not span m");
    for (const auto& [k, c] : *y) out[{static_cast<int>(where_[k].first), where_[k].second}] = c;
    return out;
  }

  int lowest_level(const SparseVector& x) const {
    auto c = coordinates(x);
    return c.empty() ? depth() + 1 : c.begin()->first.first;
  }

 private:
  std::vector<std::vector<SparseVector>> levels_;
  std::vector<std::pair<std::size_t, std::size_t>> where_;
  std::unique_ptr<LinearSolver> solver_;
};

}  // namespace

std::vector<std::vector<SparseVector>> filtration_basis(const BaseAlgebra& a) {
  std::vector<std::vector<SparseVector>> out;
  for (int n = 1; n < a.nilpotency(); ++n) {
    EchelonBasis below = a.power(n + 1);
    EchelonBasis here = a.power(n);
    std::vector<SparseVector> level;
    for (const auto& [piv, row] : here.rows())
      for (Parity p : {Parity::even, Parity::odd}) {
        SparseVector h = part_of_parity(row, a, p);
        if (!h.empty() && below.insert(h)) level.push_back(h);
      }
    out.push_back(std::move(level));
  }
  return out;
}

SparseVector evaluate_at(const BaseAlgebra& target, const Polynomial& poly, const std::vector<SparseVector>& images) {
  SparseVector out;
  for (const auto& [e, c] : poly) {
    std::optional<SparseVector> acc;
    for (std::size_t g = 0; g < e.size(); ++g)
      for (int r = 0; r < e[g]; ++r) acc = acc ? target.multiply(*acc, images.at(g)) : images.at(g);
    if (!acc) throw std::invalid_argument("evaluate_at: constant term");
    out.add_scaled(*acc, c);
  }
  return out;
}

std::optional<Factorization> factor_infinitesimal(const DeformationProblem& p, const Deformation& def) {
  const BaseAlgebra& b = *def.base;
  if (!b.is_infinitesimal()) throw std::invalid_argument("factor_infinitesimal: base is not infinitesimal");
  const auto& params = p.parameter_classes();
  std::vector<int> param_of(p.tangent().size(), -1);
  for (std::size_t k = 0; k < params.size(); ++k) param_of[params[k]] = static_cast<int>(k);
  Factorization out{std::vector<SparseVector>(params.size()), Coefficients(b.dim())};
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (def.delta[j].empty()) continue;
    if (!p.tangent().in_level(def.delta[j])) return std::nullopt;
    auto dec = p.tangent().decompose(def.delta[j]);
    if (!dec) return std::nullopt;
    for (std::size_t i = 0; i < dec->coordinates.size(); ++i) {
      if (dec->coordinates[i] == 0) continue;
      if (param_of[i] < 0) return std::nullopt;
      out.generator_images[param_of[i]].add(j, dec->coordinates[i]);
    }
    // δ'_j = Σ c_i μ_i + D(y) and the gauge acts by -D(λ)
    out.gauge[j] = dec->primitive.scaled(-1);
  }
  return out;
}

VerifyResult verify_versality(const DeformationProblem& p, const MiniversalDeformation& m, const Deformation& target) {
  VerifyResult result;
  const BaseAlgebra& a = *m.deformation.base;
  const BaseAlgebra& t = *target.base;
  const LieStructure& lie = p.lie();
  const CochainSpace& cs = p.cochains();

  auto bad = deformation_violations(p, target);
  if (!bad.empty()) {
    result.message = "target is not a deformation: " + bad.front();
    return result;
  }
  if (t.nilpotency() > m.order + 1) {
    result.message = "target base needs order " + std::to_string(t.nilpotency() - 1) + " but the miniversal deformation has order " +
                     std::to_string(m.order);
    return result;
  }

  Adapted adapted(t);
  const std::size_t ngen = m.generators.size();
  std::vector<SparseVector> mu(ngen);
  for (std::size_t g = 0; g < ngen; ++g) {
    const SparseVector& e = a.generator_element(g);
    for (const auto& [k, c] : e) mu[g].add_scaled(m.deformation.delta[k], c);
  }
  std::vector<SparseVector> minus_d(cs.dim());
  for (std::size_t g : p.gauge_level()) minus_d[g] = lie.differential(SparseVector::unit(g)).scaled(-1);

  std::vector<SparseVector> x(ngen);
  Coefficients lambda(t.dim());

  auto residual = [&]() {
    AlgebraMorphism f = AlgebraMorphism::from_generators(a, t, x);
    Coefficients moved = gauge_action(lie, t, lambda, pull(m.deformation.delta, f.images(), t.dim()));
    for (std::size_t l = 0; l < t.dim(); ++l) moved[l] -= target.delta[l];
    return moved;
  };

  for (int n = 1; n <= adapted.depth(); ++n) {
    for (const auto& r : m.relations) {
      int lv = adapted.lowest_level(evaluate_at(t, r, x));
      if (lv <= n) {
        result.message = "relation " + to_string(r, m.generators) + " fails at order " + std::to_string(lv);
        return result;
      }
    }
    const auto& basis = adapted.levels()[n - 1];
    // E at level n, by (cochain coordinate, basis index)
    Coefficients e = residual();
    std::map<std::size_t, SparseVector> by_coordinate;
    for (std::size_t l = 0; l < t.dim(); ++l)
      for (const auto& [q, c] : e[l]) by_coordinate[q].add(l, c);
    std::map<std::pair<std::size_t, std::size_t>, Rational> rhs;
    for (const auto& [q, v] : by_coordinate)
      for (const auto& [pos, c] : adapted.coordinates(v)) {
        if (pos.first < n) throw std::logic_error("verify_versality: residual below the current order");
        if (pos.first == n) rhs[{q, pos.second}] = -c;
      }

    // unknowns: generator corrections and gauge corrections with values in the level
    struct Unknown {
      bool generator;
      std::size_t index;  // generator or gauge coordinate
      std::size_t b;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Parity pb = *t.parity_of(basis[b]);
      for (std::size_t g = 0; g < ngen; ++g)
        if (m.generators[g].parity == pb) unknowns.push_back({true, g, b});
      for (std::size_t g : p.gauge_level())
        if (cs.parity(g) == pb) unknowns.push_back({false, g, b});
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    auto row = [&](std::size_t q, std::size_t b) {
      auto [it, fresh] = row_of.try_emplace({q, b}, row_of.size());
      return it->second;
    };
    for (const auto& [key, c] : rhs) row(key.first, key.second);
    std::vector<SparseVector> cols;
    std::size_t ngen_unknowns = 0;
    for (const auto& u : unknowns) {
      const SparseVector& image = u.generator ? mu[u.index] : minus_d[u.index];
      if (u.generator) ++ngen_unknowns;
      SparseVector col;
      for (const auto& [q, c] : image) col.add(row(q, u.b), c);
      cols.push_back(std::move(col));
    }
    std::map<std::size_t, Rational> b_map;
    for (const auto& [key, c] : rhs) b_map[row_of.at(key)] = c;
    Matrix sys = Matrix::from_columns(cols, row_of.size());
    LinearSolver solver(sys);
    // generator corrections left free: kernel directions that move some generator
    std::size_t freedom = 0;
    {
      EchelonBasis moved(ngen_unknowns);
      for (const auto& k : kernel_basis(sys)) {
        SparseVector proj;
        std::size_t gi = 0;
        for (std::size_t j = 0; j < unknowns.size(); ++j)
          if (unknowns[j].generator) {
            if (k[j] != 0) proj.add(gi, k[j]);
            ++gi;
          }
        if (moved.insert(proj)) ++freedom;
      }
    }
    result.levels.push_back({n, unknowns.size(), row_of.size(), solver.rank(), freedom});
    auto sol = solver.solve(SparseVector::from_map(b_map));
    if (!sol) {
      result.message = "no base change or gauge matches the target at order " + std::to_string(n);
      return result;
    }
    for (const auto& [j, c] : *sol) {
      const Unknown& u = unknowns[j];
      if (u.generator) {
        x[u.index].add_scaled(basis[u.b], c);
      } else {
        for (const auto& [l, bc] : basis[u.b]) lambda[l].add(u.index, c * bc);
      }
    }
  }

  for (const auto& r : m.relations)
    if (!evaluate_at(t, r, x).empty()) {
      result.message = "relation " + to_string(r, m.generators) + " does not vanish on the images";
      return result;
    }
  AlgebraMorphism f = AlgebraMorphism::from_generators(a, t, x);
  auto fv = f.violations();
  if (!fv.empty()) {
    result.message = "base change is not an algebra morphism: " + fv.front();
    return result;
  }
  if (!is_zero(residual())) {
    result.message = "gauge transformed push-out differs from the target";
    return result;
  }
  result.ok = true;
  result.message = "factors through the miniversal deformation";
  result.factorization = Factorization{x, lambda};
  return result;
}

}  // namespace codiff
