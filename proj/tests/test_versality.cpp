#include "doctest.h"

#include <chrono>

#include "algebras.hpp"
#include "codiff/versality.hpp"
#include "mc_oracle.hpp"

using namespace codiff;
using namespace codiff::testing;

namespace {

std::shared_ptr<const BaseAlgebra> share(BaseAlgebra a) { return std::make_shared<const BaseAlgebra>(std::move(a)); }

std::vector<Generator> generators(std::size_t even, std::size_t odd) {
  std::vector<Generator> g;
  for (std::size_t i = 0; i < even; ++i) g.push_back({"s" + std::to_string(i + 1), Parity::even, 1});
  for (std::size_t i = 0; i < odd; ++i) g.push_back({"u" + std::to_string(i + 1), Parity::odd, 1});
  return g;
}

// Random infinitesimal deformation: Σ (random combination of classes + D(random gauge)) per basis element.
Deformation random_infinitesimal(const DeformationProblem& p, std::shared_ptr<const BaseAlgebra> base, Rng& rng) {
  Deformation def{base, Coefficients(base->dim())};
  for (std::size_t j = 0; j < base->dim(); ++j) {
    Parity want = flip(base->parity(j));
    for (std::size_t k : p.parameter_classes())
      if (p.tangent()[k].parity == want && rng.coin(0.5)) def.delta[j].add_scaled(p.tangent()[k].representative, rng.small_integer(2));
    SparseVector lam;
    for (std::size_t g : p.gauge_level())
      if (p.cochains().parity(g) == base->parity(j) && rng.coin(0.2)) lam.add(g, rng.small_integer(1));
    def.delta[j] += p.lie().differential(lam);
  }
  return def;
}

SparseVector random_element(const BaseAlgebra& a, Parity p, int min_level, Rng& rng, double density = 0.4) {
  SparseVector x;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == p && a.filtration_level(SparseVector::unit(i)) >= min_level && rng.coin(density))
      x.add(i, rng.small_integer(2));
  return x;
}

}  // namespace

TEST_CASE("filtration basis is homogeneous and adapted") {
  Polynomial rel{{Exponents{2, 0, 0}, Rational(1)}, {Exponents{0, 3, 0}, Rational(-1)}};
  auto a = presented(generators(2, 1), 4, {rel});
  auto levels = filtration_basis(a);
  REQUIRE(static_cast<int>(levels.size()) == a.nilpotency() - 1);
  EchelonBasis all(a.dim());
  for (std::size_t n = 0; n < levels.size(); ++n)
    for (const auto& v : levels[n]) {
      CHECK(a.parity_of(v).has_value());
      CHECK(a.filtration_level(v) == static_cast<int>(n) + 1);
      CHECK(all.insert(v));
    }
  CHECK(all.rank() == a.dim());
}

TEST_CASE("infinitesimal deformations factor through the universal one") {
  Rng rng(7);
  struct Setup {
    Coderivation d;
    DeformationOptions o;
  };
  std::vector<Setup> setups{{lie_d(heisenberg(), 2), {true, false}},
                            {lie_d(r2(), 3), {}},
                            {lie_d(abelian(2), 2), {true, false}},
                            {assoc_d(upper_triangular_2x2(), 3), {}}};
  for (const auto& s : setups) {
    DeformationProblem p(s.d, s.o);
    Deformation u = universal_infinitesimal(p);
    MiniversalDeformation first = start_miniversal(p);
    for (int trial = 0; trial < 5; ++trial) {
      auto base = share(free_truncated(generators(rng.uniform(0, 2), rng.uniform(0, 1)), 2));
      Deformation def = random_infinitesimal(p, base, rng);
      REQUIRE(deformation_violations(p, def).empty());
      auto tau = factor_infinitesimal(p, def);
      REQUIRE(tau);
      AlgebraMorphism f = AlgebraMorphism::from_generators(*u.base, *base, tau->generator_images);
      CHECK(f.violations().empty());
      Deformation pushed = push_out(p, u, f, base);
      CHECK(infinitesimal_equivalence(p, pushed, def).has_value());
      CHECK(gauge_action(p.lie(), *base, tau->gauge, pushed.delta) == def.delta);

      // the order-by-order solver finds the same base change, with no freedom left
      VerifyResult v = verify_versality(p, first, def);
      REQUIRE(v.ok);
      CHECK(v.factorization->generator_images == tau->generator_images);
      for (const auto& lv : v.levels) CHECK(lv.generator_freedom == 0);
    }
  }
}

TEST_CASE("classes outside the parameters do not factor") {
  DeformationProblem p(lie_d(r2(), 3), {false, true});
  // an even class (needs an odd parameter) exists for r2 in the full complex
  std::optional<std::size_t> even_class;
  for (std::size_t i = 0; i < p.tangent().size(); ++i)
    if (p.tangent()[i].parity == Parity::even) even_class = i;
  REQUIRE(even_class);
  auto base = share(free_truncated(generators(0, 1), 2));
  Deformation def{base, {p.tangent()[*even_class].representative}};
  REQUIRE(deformation_violations(p, def).empty());
  CHECK_FALSE(factor_infinitesimal(p, def));
  VerifyResult v = verify_versality(p, start_miniversal(p), def);
  CHECK_FALSE(v.ok);
}

TEST_CASE("push-outs of the miniversal deformation are recognised") {
  Rng rng(31);
  for (bool strict : {true, false}) {
    DeformationProblem p(lie_d(heisenberg(), 3), {strict, false});
    MiniversalDeformation m = miniversal(p, 3);
    const BaseAlgebra& a = *m.deformation.base;
    int found = 0;
    for (int trial = 0; trial < 40 && found < 4; ++trial) {
      auto target = share(free_truncated(generators(rng.uniform(1, 2), strict ? 0 : rng.uniform(0, 1)), 4));
      std::vector<SparseVector> x;
      for (const auto& g : m.generators) x.push_back(rng.coin(0.5) ? random_element(*target, g.parity, 1, rng) : SparseVector());
      bool kills = true;
      for (const auto& r : m.relations) kills = kills && evaluate_at(*target, r, x).empty();
      if (!kills) continue;
      ++found;
      AlgebraMorphism f = AlgebraMorphism::from_generators(a, *target, x);
      REQUIRE(f.violations().empty());
      Deformation pushed = push_out(p, m.deformation, f, target);
      Coefficients lambda(target->dim());
      for (std::size_t l = 0; l < target->dim(); ++l)
        for (std::size_t g : p.gauge_level())
          if (p.cochains().parity(g) == target->parity(l) && rng.coin(0.1)) lambda[l].add(g, rng.small_integer(1));
      Deformation def{target, gauge_action(p.lie(), *target, lambda, pushed.delta)};
      CHECK(squares_to_zero(p.lie(), *target, def.delta));
      VerifyResult v = verify_versality(p, m, def);
      INFO(v.message);
      REQUIRE(v.ok);
      AlgebraMorphism g = AlgebraMorphism::from_generators(a, *target, v.factorization->generator_images);
      Deformation again = push_out(p, m.deformation, g, target);
      CHECK(gauge_action(p.lie(), *target, v.factorization->gauge, again.delta) == def.delta);
      // the linear part of the base change is forced
      auto dx = differential_of(p, def);
      auto dg = differential_of(p, again);
      CHECK(dx == dg);
    }
    CHECK(found > 0);
  }
}

TEST_CASE("verification refuses targets deeper than the miniversal order") {
  DeformationProblem p(lie_d(abelian(2), 2), {true, false});
  MiniversalDeformation m = miniversal(p, 2);
  auto deep = share(free_truncated(generators(1, 0), 4));
  Deformation def{deep, Coefficients(deep->dim())};
  VerifyResult v = verify_versality(p, m, def);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("order") != std::string::npos);
  // in dimension two every bracket is Lie, so any weight-2 coefficients are a deformation
  MiniversalDeformation m3 = miniversal(p, 3);
  Deformation curve{deep, Coefficients(deep->dim())};
  curve.delta[0] = SparseVector::unit(p.coefficient_level().front());
  curve.delta[1] = SparseVector::unit(p.coefficient_level().back());
  CHECK(verify_versality(p, m3, curve).ok);
  Deformation broken = curve;
  broken.delta[0] = SparseVector::unit(p.gauge_level().front());
  VerifyResult w = verify_versality(p, m3, broken);
  CHECK_FALSE(w.ok);
  CHECK(w.message.find("not a deformation") != std::string::npos);
}

TEST_CASE("brute-force Maurer-Cartan solutions factor through the miniversal deformation") {
  struct Case {
    WordKind kind;
    std::size_t even_dim;
    int cap;
    std::size_t odd_generators;
    int support;
  };
  for (const auto& c : {Case{WordKind::symmetric, 1, 3, 2, 3}, Case{WordKind::tensor, 1, 3, 2, 3},
                        Case{WordKind::symmetric, 2, 2, 2, 1}, Case{WordKind::symmetric, 1, 3, 3, 1}}) {
    GradedSpace w = even_space(c.even_dim, "x");
    Coderivation zero(make_coalgebra(w, c.kind, c.cap), Parity::odd);
    DeformationProblem p(zero);
    int order = static_cast<int>(c.odd_generators);
    MiniversalDeformation m = miniversal(p, order);
    auto base = share(free_truncated(generators(0, c.odd_generators), order + 1));
    auto all = p.cochains().select(1, c.cap);
    auto solutions = brute_force_mc(p.lie(), *base, all, {-1, 0, 1}, c.support);
    CHECK(solutions.size() > 1);
    for (const auto& s : solutions) {
      Deformation def{base, s};
      VerifyResult v = verify_versality(p, m, def);
      INFO(v.message);
      CHECK(v.ok);
    }
  }
}
