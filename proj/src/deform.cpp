#include "codiff/deform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace codiff {

namespace {

std::vector<std::size_t> all_indices(const CochainSpace& cs) { return cs.select(1, cs.coalgebra().weight_cap()); }

std::vector<bool> membership(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<bool> in(n, false);
  for (std::size_t i : idx) in[i] = true;
  return in;
}

Coderivation prepare_differential(const Coderivation& d, const DeformationOptions& o) {
  if (!o.strict) return d;
  for (int a : d.nonzero_arities())
    if (a != 2) throw std::invalid_argument("strict deformations need a quadratic structure (arity 2 only)");
  int cap = std::max(d.weight_cap(), 4);
  if (cap == d.weight_cap()) return d;
  return d.recapped(make_coalgebra(d.space(), d.kind(), cap));
}

// Span of the ideal generated by the given elements of m.
EchelonBasis ideal_span(const BaseAlgebra& a, const std::vector<SparseVector>& gens) {
  EchelonBasis ideal(a.dim());
  std::vector<SparseVector> frontier;
  for (const auto& x : gens)
    if (ideal.insert(x)) frontier.push_back(x);
  while (!frontier.empty()) {
    std::vector<SparseVector> next;
    for (const auto& f : frontier)
      for (std::size_t g = 0; g < a.generators().size(); ++g) {
        SparseVector p = a.multiply(f, a.generator_element(g));
        if (ideal.insert(p)) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return ideal;
}

SparseVector apply_map(const std::vector<SparseVector>& images, const SparseVector& x) {
  SparseVector out;
  for (const auto& [i, c] : x) out.add_scaled(images[i], c);
  return out;
}

// Coefficients over a source basis pushed through a linear map of bases.
Coefficients transport(const Coefficients& x, const std::vector<SparseVector>& images, std::size_t target_dim) {
  Coefficients out(target_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].empty()) continue;
    for (const auto& [j, c] : images[i]) out[j].add_scaled(x[i], c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- problem

DeformationProblem::DeformationProblem(const Coderivation& d, DeformationOptions options) : options_(options) {
  lie_ = std::make_shared<LieStructure>(prepare_differential(d, options));
  const CochainSpace& cs = lie_->cochains();
  auto all = all_indices(cs);
  if (options.strict) {
    coefficient_level_ = cs.select(2, 2);
    gauge_level_ = cs.select(1, 1);
    obstruction_level_ = cs.select(3, 3);
    tangent_ = std::make_shared<ClassSpace>(*lie_, coefficient_level_, gauge_level_, obstruction_level_);
    obstructions_ = std::make_shared<ClassSpace>(*lie_, obstruction_level_, coefficient_level_, cs.select(4, 4));
  } else {
    coefficient_level_ = gauge_level_ = obstruction_level_ = all;
    tangent_ = std::make_shared<ClassSpace>(*lie_, all, all, all);
    obstructions_ = tangent_;
  }
  in_coefficient_ = membership(cs.dim(), coefficient_level_);
  in_gauge_ = membership(cs.dim(), gauge_level_);
  for (std::size_t i = 0; i < tangent_->size(); ++i)
    if (!options.even_parameters || (*tangent_)[i].parity == Parity::odd) parameter_classes_.push_back(i);
  for (const auto& v : kernel_basis(lie_->differential_matrix(gauge_level_, all))) {
    std::map<std::size_t, Rational> m;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) m[gauge_level_[k]] = v[k];
    gauge_cocycles_.push_back(SparseVector::from_map(m));
  }
}

bool DeformationProblem::in_coefficient_level(const SparseVector& x) const {
  for (const auto& [i, v] : x)
    if (i >= in_coefficient_.size() || !in_coefficient_[i]) return false;
  return true;
}

bool DeformationProblem::in_gauge_level(const SparseVector& x) const {
  for (const auto& [i, v] : x)
    if (i >= in_gauge_.size() || !in_gauge_[i]) return false;
  return true;
}

// ---------------------------------------------------------------- L ⊗ A arithmetic

Coefficients tensor_bracket(const LieStructure& lie, const BaseAlgebra& base, const Coefficients& x, const Coefficients& y) {
  const CochainSpace& cs = lie.cochains();
  Coefficients out(base.dim());
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].empty()) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b].empty()) continue;
      const SparseVector& ab = base.product(a, b);
      if (ab.empty()) continue;
      SparseVector br = lie.bracket(x[a], y[b]);
      if (br.empty()) continue;
      int s = sign_of(base.parity(a), *cs.parity_of(y[b]));
      for (const auto& [l, c] : ab) out[l].add_scaled(br, c * s);
    }
  }
  return out;
}

Coefficients tensor_differential(const LieStructure& lie, const Coefficients& x) {
  Coefficients out(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    if (!x[a].empty()) out[a] = lie.differential(x[a]);
  return out;
}

Coefficients mc_defect(const LieStructure& lie, const BaseAlgebra& base, const Coefficients& delta) {
  if (delta.size() != base.dim()) throw std::invalid_argument("mc_defect: one coefficient per basis element of m expected");
  Coefficients out = tensor_differential(lie, delta);
  Coefficients sq = tensor_bracket(lie, base, delta, delta);
  for (std::size_t a = 0; a < out.size(); ++a) out[a].add_scaled(sq[a], Rational(1, 2));
  return out;
}

Coefficients mc_defect(const DeformationProblem& p, const Deformation& def) { return mc_defect(p.lie(), *def.base, def.delta); }

bool is_zero(const Coefficients& x) {
  return std::all_of(x.begin(), x.end(), [](const SparseVector& v) { return v.empty(); });
}

Coefficients gauge_action(const LieStructure& lie, const BaseAlgebra& base, const Coefficients& lambda, const Coefficients& delta) {
  Coefficients out = delta;
  // ad_λ(d) = -D(λ)
  Coefficients term = tensor_differential(lie, lambda);
  for (auto& v : term) v.scale(-1);
  Coefficients b = tensor_bracket(lie, base, lambda, delta);
  for (std::size_t a = 0; a < term.size(); ++a) term[a] += b[a];
  for (int k = 2; !is_zero(term); ++k) {
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += term[a];
    term = tensor_bracket(lie, base, lambda, term);
    for (auto& v : term) v.scale(Rational(1, k));
  }
  return out;
}

std::vector<std::string> deformation_violations(const DeformationProblem& p, const Deformation& def) {
  std::vector<std::string> out;
  const BaseAlgebra& a = *def.base;
  if (def.delta.size() != a.dim()) return {"coefficient count differs from the base dimension"};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (def.delta[i].empty()) continue;
    if (!p.in_coefficient_level(def.delta[i])) out.push_back("coefficient of " + a.element(i).label + " outside the allowed weights");
    auto par = p.cochains().parity_of(def.delta[i]);
    if (*par != flip(a.parity(i))) out.push_back("term at " + a.element(i).label + " is not odd");
  }
  if (!out.empty()) return out;
  Coefficients defect = mc_defect(p, def);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!defect[i].empty()) out.push_back("Maurer-Cartan fails at " + a.element(i).label);
  return out;
}

std::optional<Coefficients> infinitesimal_equivalence(const DeformationProblem& p, const Deformation& a, const Deformation& b) {
  if (a.base->dim() != b.base->dim()) throw std::invalid_argument("infinitesimal_equivalence: different bases");
  if (!a.base->is_infinitesimal()) throw std::invalid_argument("infinitesimal_equivalence: base is not infinitesimal");
  Coefficients lambda(a.base->dim());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    SparseVector diff = a.delta[i] - b.delta[i];
    if (diff.empty()) continue;
    if (!p.tangent().in_level(diff)) return std::nullopt;
    auto y = p.tangent().primitive(diff);
    if (!y) return std::nullopt;
    lambda[i] = *y;
  }
  return lambda;
}

Deformation push_out(const DeformationProblem& p, const Deformation& def, const AlgebraMorphism& tau,
                     std::shared_ptr<const BaseAlgebra> target) {
  if (&tau.source() != def.base.get()) throw std::invalid_argument("push_out: morphism does not start at the base");
  if (&tau.target() != target.get()) throw std::invalid_argument("push_out: target does not match the morphism");
  if (!tau.violations().empty()) throw std::invalid_argument("push_out: not an algebra morphism: " + tau.violations().front());
  Deformation out{target, transport(def.delta, tau.images(), target->dim())};
  if (!is_zero(mc_defect(p, out))) throw std::invalid_argument("push_out: Maurer-Cartan fails in the target");
  return out;
}

std::vector<Generator> parameter_generators(const DeformationProblem& p) {
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < p.parameter_classes().size(); ++k) {
    const auto& c = p.tangent()[p.parameter_classes()[k]];
    gens.push_back({"t" + std::to_string(k + 1), flip(c.parity), c.degree});
  }
  return gens;
}

Deformation universal_infinitesimal(const DeformationProblem& p) {
  auto gens = parameter_generators(p);
  auto base = std::make_shared<const BaseAlgebra>(free_truncated(gens, 2));
  Deformation def{base, Coefficients(base->dim())};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::size_t i = base->generator_element(g).entries().front().first;
    def.delta[i] = p.tangent()[p.parameter_classes()[g]].representative;
  }
  return def;
}

std::vector<Vector> differential_of(const DeformationProblem& p, const Deformation& def) {
  const BaseAlgebra& a = *def.base;
  std::size_t r = a.cotangent_indices().size();
  std::vector<SparseVector> parts(r);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (def.delta[i].empty()) continue;
    Vector c = a.cotangent_coordinates(SparseVector::unit(i));
    for (std::size_t q = 0; q < r; ++q)
      if (c[q] != 0) parts[q].add_scaled(def.delta[i], c[q]);
  }
  std::vector<Vector> out;
  for (const auto& x : parts) {
    auto dec = p.tangent().decompose(x);
    if (!dec) throw std::logic_error("differential_of: order-one part is not a cocycle");
    out.push_back(dec->coordinates);
  }
  return out;
}

bool ObstructionClass::vanishes() const {
  for (const auto& v : classes)
    for (const auto& x : v)
      if (x != 0) return false;
  return true;
}

ObstructionClass obstruction(const DeformationProblem& p, const Deformation& def, const Extension& extension) {
  const std::size_t n = def.base->dim();
  if (extension.base_dim != n) throw std::invalid_argument("obstruction: extension is over another algebra");
  Coefficients lifted(extension.algebra.dim());
  for (std::size_t i = 0; i < n; ++i) lifted[i] = def.delta[i];
  Coefficients defect = mc_defect(p.lie(), extension.algebra, lifted);
  for (std::size_t i = 0; i < n; ++i)
    if (!defect[i].empty()) throw std::invalid_argument("obstruction: Maurer-Cartan fails over the base");
  ObstructionClass out;
  for (std::size_t s = 0; s < extension.module_parities.size(); ++s) {
    const SparseVector& g = defect[n + s];
    if (!g.empty() && !p.obstruction_space().in_level(g))
      throw std::logic_error("obstruction: component outside the obstruction weights");
    auto dec = p.obstruction_space().decompose(g);
    if (!dec) throw std::logic_error("obstruction: component is not a cocycle");
    out.cocycles.push_back(g);
    out.classes.push_back(dec->coordinates);
  }
  return out;
}

// ---------------------------------------------------------------- miniversal construction

MiniversalDeformation start_miniversal(const DeformationProblem& p) {
  MiniversalDeformation m;
  m.generators = parameter_generators(p);
  m.generator_classes = p.parameter_classes();
  m.deformation = universal_infinitesimal(p);
  m.order = 1;
  return m;
}

MiniversalDeformation extend_deformation(const DeformationProblem& p, const MiniversalDeformation& cur) {
  const auto& gens = cur.generators;
  const BaseAlgebra& a = *cur.deformation.base;
  const int top = cur.order + 1;  // m^top = 0 in the current base
  BaseAlgebra f = free_truncated(gens, top + 1);

  // Kernel J of F -> A: the old relations and the monomials of degree `top`.
  std::vector<SparseVector> candidates;
  for (const auto& r : cur.relations) candidates.push_back(f.evaluate(r));
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (degree(*f.element(i).monomial) == top) candidates.push_back(SparseVector::unit(i));
  EchelonBasis j_span = ideal_span(f, candidates);
  std::vector<SparseVector> mj_gens;
  for (const auto& [piv, row] : j_span.rows())
    for (std::size_t g = 0; g < gens.size(); ++g) mj_gens.push_back(f.multiply(row, f.generator_element(g)));
  EchelonBasis minimal(f.dim());
  for (const auto& x : mj_gens) minimal.insert(x);
  std::vector<SparseVector> module_gens;  // minimal generators of J, spanning J/mJ
  for (const auto& x : candidates)
    if (minimal.insert(x)) module_gens.push_back(x);

  Quotient cq = quotient(f, mj_gens);
  const BaseAlgebra& c = cq.algebra;
  std::vector<SparseVector> module_basis;
  for (const auto& x : module_gens) module_basis.push_back(apply_map(cq.projection, x));

  // δ lifted along monomials
  std::vector<SparseVector> lift(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) lift[i] = c.monomial_value(*a.element(i).monomial);
  Coefficients delta = transport(cur.deformation.delta, lift, c.dim());
  Coefficients gamma = mc_defect(p.lie(), c, delta);

  // γ = Σ_c γ_c ⊗ r_c
  LinearSolver in_module(Matrix::from_columns(module_basis, c.dim()));
  std::map<std::size_t, SparseVector> by_coordinate;
  for (std::size_t l = 0; l < c.dim(); ++l)
    for (const auto& [q, x] : gamma[l]) by_coordinate[q].add(l, x);
  std::vector<SparseVector> gamma_c(module_basis.size());
  for (const auto& [q, v] : by_coordinate) {
    auto y = in_module.solve(v);
    if (!y) throw std::logic_error("extend_deformation: Maurer-Cartan defect does not lie in the module");
    for (const auto& [k, x] : *y) gamma_c[k].add(q, x);
  }

  const ClassSpace& obs = p.obstruction_space();
  std::vector<SparseVector> killed(obs.size());  // relation ν^i, as an element of C
  Coefficients beta(c.dim());
  std::size_t corrected = 0;
  for (std::size_t k = 0; k < module_basis.size(); ++k) {
    if (gamma_c[k].empty()) continue;
    if (!obs.in_level(gamma_c[k])) throw std::logic_error("extend_deformation: obstruction outside the obstruction weights");
    auto dec = obs.decompose(gamma_c[k]);
    if (!dec) throw std::logic_error("extend_deformation: obstruction component is not a cocycle");
    for (std::size_t i = 0; i < obs.size(); ++i)
      if (dec->coordinates[i] != 0) {
        killed[i].add_scaled(module_basis[k], dec->coordinates[i]);
      }
    if (!dec->primitive.empty()) {
      ++corrected;
      for (const auto& [l, x] : module_basis[k]) beta[l].add_scaled(dec->primitive, -x);
    }
  }
  for (std::size_t l = 0; l < c.dim(); ++l) delta[l] += beta[l];

  std::vector<SparseVector> kill;
  for (const auto& v : killed)
    if (!v.empty()) kill.push_back(v);
  Quotient nq = quotient(c, kill);
  MiniversalDeformation next;
  next.generators = gens;
  next.generator_classes = cur.generator_classes;
  next.order = cur.order + 1;
  next.relations = nq.algebra.ideal_generators(top + 1);
  auto base = std::make_shared<const BaseAlgebra>(presented(gens, top + 1, next.relations));
  if (base->dim() != nq.algebra.dim()) throw std::logic_error("extend_deformation: presentation does not match the quotient");
  for (std::size_t i = 0; i < base->dim(); ++i)
    if (base->element(i).monomial != nq.algebra.element(i).monomial)
      throw std::logic_error("extend_deformation: presentation basis differs from the quotient basis");
  next.deformation = {base, transport(delta, nq.projection, base->dim())};
  if (!is_zero(mc_defect(p, next.deformation))) throw std::logic_error("extend_deformation: Maurer-Cartan fails after the step");

  EchelonBasis rank_span(c.dim());
  for (const auto& v : kill) rank_span.insert(v);
  next.steps = cur.steps;
  next.steps.push_back({next.order, module_basis.size(), rank_span.rank(), corrected, base->dim()});
  return next;
}

MiniversalDeformation miniversal(const DeformationProblem& p, int order) {
  if (order < 1) throw std::invalid_argument("miniversal: order must be at least 1");
  MiniversalDeformation m = start_miniversal(p);
  while (m.order < order) m = extend_deformation(p, m);
  return m;
}

}  // namespace codiff
