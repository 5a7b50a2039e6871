#include "doctest.h"

#include "algebras.hpp"
#include "codiff/coderiv.hpp"

using namespace codiff;
using namespace codiff::testing;

static SparseVector e(std::size_t i, Rational c = 1) {
  SparseVector v;
  v.add(i, c);
  return v;
}

TEST_CASE("word bases") {
  GradedSpace w({{"a", Parity::even}, {"b", Parity::odd}});
  WordBasis s2(w, WordKind::symmetric, 2);
  CHECK(s2.size() == 2);  // aa, ab  (bb vanishes)
  CHECK(s2.letters(0) == Letters{0, 0});
  CHECK(s2.letters(1) == Letters{0, 1});
  CHECK(WordBasis(w, WordKind::tensor, 3).size() == 8);
  CHECK(WordBasis(w, WordKind::symmetric, 3).size() == 2);  // aaa, aab
}

TEST_CASE("resource cap on word enumeration") {
  setenv("CODIFF_MAX_WORDS", "50", 1);
  CHECK_THROWS_AS(make_coalgebra(even_space(3), WordKind::tensor, 4), ResourceLimitError);
  unsetenv("CODIFF_MAX_WORDS");
  CHECK_NOTHROW(make_coalgebra(even_space(3), WordKind::tensor, 4));
}

TEST_CASE("evaluate examples") {
  auto co = make_coalgebra(GradedSpace({{"a", Parity::odd}, {"b", Parity::even}}), WordKind::symmetric, 3);
  Coderivation zero(co, Parity::odd);
  CHECK(evaluate(zero, Word{WordKind::symmetric, {0, 1}}).empty());
  Coderivation f(co, Parity::odd);
  f.add(1, {0}, e(1, 3));  // a -> 3b
  auto r = evaluate(f, Word{WordKind::symmetric, {0}});
  CHECK(r.size() == 1);
  CHECK(r[Letters{1}] == 3);
  CHECK_THROWS_AS(evaluate(f, Word{WordKind::tensor, {0}}), std::invalid_argument);

  // arity-2 part on a length-3 word: sum over the three unshuffles of Sh(2,1)
  auto co2 = make_coalgebra(GradedSpace({{"x", Parity::odd}, {"y", Parity::odd}, {"z", Parity::odd}, {"u", Parity::even}}),
                            WordKind::symmetric, 3);
  Coderivation g(co2, Parity::even);
  g.add(2, {0, 1}, e(3));      // xy -> u
  g.add(2, {0, 2}, e(3, 2));   // xz -> 2u
  g.add(2, {1, 2}, e(3, 5));   // yz -> 5u
  auto s = evaluate(g, Word{WordKind::symmetric, {0, 1, 2}});
  // (xy)z: ε=+1 -> u z ; (xz)y: ε=-1 -> -2 u y ; (yz)x: ε=+1 -> 5 u x
  WordSum expect;
  expect[{0, 3}] = 5;    // u x -> canonical x u (u even, no sign)
  expect[{1, 3}] = -2;
  expect[{2, 3}] = 1;
  CHECK(s == expect);
}

TEST_CASE("bracket examples") {
  auto co = make_coalgebra(GradedSpace({{"a", Parity::odd}, {"b", Parity::even}}), WordKind::symmetric, 3);
  Coderivation f(co, Parity::odd), g(co, Parity::odd), zero(co, Parity::even);
  f.add(1, {0}, e(1));      // a -> b
  g.add(1, {1}, e(0, 2));   // b -> 2a
  CHECK(bracket(f, zero).is_zero());
  Coderivation br = bracket(f, g);
  CHECK(br.parity() == Parity::even);
  CHECK(br.nonzero_arities() == std::vector<int>{1});
  // f∘g + g∘f since both odd: a -> 2a, b -> 2b
  CHECK(br.part(1).apply({0}, co->space()) == e(0, 2));
  CHECK(br.part(1).apply({1}, co->space()) == e(1, 2));

  Coderivation d = lie_d(r2(), 3);
  CHECK(bracket(d, d).is_zero());
}

TEST_CASE("codifferential check matches the triple-loop Jacobi oracle on named algebras") {
  CHECK(is_codifferential(Coderivation(make_coalgebra(even_space(2), WordKind::symmetric, 3), Parity::odd)));
  REQUIRE(jacobi_holds(sl2()));
  CHECK(is_codifferential(lie_d(sl2(), 3)));
  REQUIRE_FALSE(jacobi_holds(sl2_perturbed()));
  CHECK_FALSE(is_codifferential(lie_d(sl2_perturbed(), 3)));
  CHECK(codifferential_defect(lie_d(sl2_perturbed(), 3)) == 3);
  CHECK_THROWS_AS(is_codifferential(Coderivation(make_coalgebra(even_space(2), WordKind::symmetric, 3), Parity::even)),
                  std::invalid_argument);
  REQUIRE(associativity_holds(upper_triangular_2x2()));
  CHECK(is_codifferential(assoc_d(upper_triangular_2x2(), 3)));
}

TEST_CASE("big_d squares to zero") {
  Rng rng(5);
  for (const auto& t : {sl2(), heisenberg(), r2()}) {
    Coderivation d = lie_d(t, 3);
    CHECK(big_d(d, d).is_zero());
    for (int i = 0; i < 5; ++i) {
      Coderivation phi = random_coderivation(rng, d.coalgebra_ptr(), rng.coin() ? Parity::odd : Parity::even, 0.4);
      CHECK(big_d(d, big_d(d, phi)).is_zero());
    }
  }
  Coderivation d = assoc_d(upper_triangular_2x2(), 3);
  Coderivation phi = random_coderivation(rng, d.coalgebra_ptr(), Parity::even, 0.3);
  CHECK(big_d(d, big_d(d, phi)).is_zero());
  Coderivation zero(d.coalgebra_ptr(), Parity::odd);
  CHECK(big_d(zero, phi).is_zero());
}

TEST_CASE("weight components") {
  auto co = make_coalgebra(GradedSpace({{"a", Parity::odd}, {"b", Parity::even}}), WordKind::symmetric, 4);
  Rng rng(9);
  Coderivation a = random_coderivation(rng, co, Parity::odd, 0.7, 2);
  Coderivation b = random_coderivation(rng, co, Parity::even, 0.7, 2);
  Coderivation br = bracket(a, b);
  for (int n : br.nonzero_arities()) CHECK(n == 3);
  CHECK(weight_component(a, 2) == a.part(2));
  CHECK(weight_component(Coderivation(co, Parity::odd), 1).is_zero());
  CHECK_THROWS(weight_component(a, 5));
  CHECK_THROWS(weight_component(a, 0));
}

TEST_CASE("bracket filtration: arities m and n land in m+n-1") {
  Rng rng(21);
  for (WordKind kind : {WordKind::symmetric, WordKind::tensor}) {
    auto co = make_coalgebra(GradedSpace({{"a", Parity::odd}, {"b", Parity::even}}), kind, 4);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; m + n - 1 <= 4; ++n) {
        Coderivation a = random_coderivation(rng, co, Parity::odd, 0.6, m);
        Coderivation b = random_coderivation(rng, co, Parity::odd, 0.6, n);
        for (int k : bracket(a, b).nonzero_arities()) CHECK(k == m + n - 1);
      }
  }
}

TEST_CASE("graded antisymmetry and Jacobi on random coderivations") {
  Rng rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    WordKind kind = trial % 2 ? WordKind::tensor : WordKind::symmetric;
    auto co = make_coalgebra(random_space(rng, 2, 2), kind, rng.uniform(1, 3));
    auto pick = [&] { return rng.coin() ? Parity::odd : Parity::even; };
    Coderivation a = random_coderivation(rng, co, pick(), 0.3);
    Coderivation b = random_coderivation(rng, co, pick(), 0.3);
    Coderivation c = random_coderivation(rng, co, pick(), 0.3);
    int s = sign_of(a.parity(), b.parity());
    CHECK(bracket(a, b) == bracket(b, a).scaled(-s));
    Coderivation lhs = bracket(a, bracket(b, c));
    Coderivation rhs = bracket(bracket(a, b), c);
    rhs += bracket(b, bracket(a, c)).scaled(s);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coderivation law on short words") {
  Rng rng(77);
  for (WordKind kind : {WordKind::symmetric, WordKind::tensor}) {
    auto co = make_coalgebra(GradedSpace({{"a", Parity::odd}, {"b", Parity::even}, {"c", Parity::odd}}), kind, 4);
    for (Parity p : {Parity::even, Parity::odd}) {
      Coderivation phi = random_coderivation(rng, co, p, 0.4);
      for (int n = 1; n <= 3; ++n) {
        Letters w(n);
        for (auto& x : w) x = rng.uniform(0, 2);
        CHECK(coderivation_law_holds(phi, w));
      }
    }
  }
}
