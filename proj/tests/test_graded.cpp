#include "doctest.h"

#include <algorithm>

#include "codiff/graded.hpp"
#include "random.hpp"

using namespace codiff;

static std::vector<Parity> par(std::initializer_list<int> xs) {
  std::vector<Parity> p;
  for (int x : xs) p.push_back(parity_of(x));
  return p;
}

TEST_CASE("parity reversion") {
  GradedSpace v({{"a", Parity::even}, {"b", Parity::odd}});
  GradedSpace w = parity_reversion(v);
  CHECK(w.name(0) == "a");
  CHECK(w.parity(0) == Parity::odd);
  CHECK(w.parity(1) == Parity::even);
  CHECK(parity_reversion(GradedSpace()).dim() == 0);
  GradedSpace e({{"x", Parity::even}, {"y", Parity::even}});
  CHECK(parity_reversion(e).parities() == par({1, 1}));
  CHECK_THROWS(GradedSpace({{"x", Parity::even}, {"x", Parity::odd}}));
}

TEST_CASE("koszul sign examples") {
  CHECK(koszul_sign({0, 1, 2}, par({1, 0, 1})) == 1);
  CHECK(koszul_sign({1, 0}, par({1, 1})) == -1);
  CHECK(koszul_sign({1, 0}, par({1, 0})) == 1);
  CHECK(koszul_sign({1, 2, 0}, par({1, 1, 1})) == 1);
  CHECK_THROWS(koszul_sign({0, 1}, par({1})));
  CHECK_THROWS(koszul_sign({0, 0}, par({1, 1})));
}

TEST_CASE("sign of permutation") {
  CHECK(sign_of_permutation({0, 1, 2}) == 1);
  CHECK(sign_of_permutation({1, 0, 2}) == -1);
  CHECK(sign_of_permutation({1, 2, 0}) == 1);
}

TEST_CASE("unshuffles") {
  auto u = unshuffles(1, 1);
  REQUIRE(u.size() == 2);
  CHECK(u[0] == Permutation{0, 1});
  CHECK(u[1] == Permutation{1, 0});
  CHECK(unshuffles(0, 3) == std::vector<Permutation>{{0, 1, 2}});
  // 2,2 against a brute-force filter of all 24 permutations
  Permutation p{0, 1, 2, 3};
  std::vector<Permutation> brute;
  do {
    if (p[0] < p[1] && p[2] < p[3]) brute.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(unshuffles(2, 2) == brute);
  auto binom = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (std::size_t k = 0; k <= 8; ++k)
    for (std::size_t l = 0; k + l <= 8; ++l) {
      auto s = unshuffles(k, l);
      CHECK(s.size() == binom(k + l, k));
      for (const auto& x : s) {
        CHECK(std::is_sorted(x.begin(), x.begin() + k));
        CHECK(std::is_sorted(x.begin() + k, x.end()));
      }
      CHECK(std::is_sorted(s.begin(), s.end()));
    }
}

TEST_CASE("koszul sign is multiplicative and trivial on even letters") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = rng.uniform(1, 6);
    auto s = testing::random_permutation(rng, n), t = testing::random_permutation(rng, n);
    std::vector<Parity> v(n);
    for (auto& x : v) x = rng.coin() ? Parity::odd : Parity::even;
    std::vector<Parity> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = v[s[i]];
    CHECK(koszul_sign(compose(s, t), v) == koszul_sign(s, v) * koszul_sign(t, vs));
    CHECK(koszul_sign(s, std::vector<Parity>(n, Parity::even)) == 1);
  }
}

TEST_CASE("symmetric canonical form") {
  GradedSpace w({{"a", Parity::odd}, {"b", Parity::odd}, {"c", Parity::even}});
  auto c = canonicalize(WordKind::symmetric, {1, 0}, w);
  CHECK(c.sign == -1);
  CHECK(c.letters == Letters{0, 1});
  CHECK(canonicalize(WordKind::symmetric, {0, 2, 0}, w).sign == 0);
  CHECK(canonicalize(WordKind::symmetric, {2, 2}, w).sign == 1);
  CHECK(canonicalize(WordKind::tensor, {1, 0}, w).letters == Letters{1, 0});
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 5);
    Letters word(n);
    for (auto& x : word) x = rng.uniform(0, 2);
    auto once = canonicalize(WordKind::symmetric, word, w);
    if (once.sign == 0) continue;
    auto twice = canonicalize(WordKind::symmetric, once.letters, w);
    CHECK(twice.sign == 1);
    CHECK(twice.letters == once.letters);
    // sign equals the Koszul sign of the sorting permutation
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<Parity> pv;
    for (auto x : word) pv.push_back(w.parity(x));
    CHECK(once.sign == koszul_sign(p, pv));
  }
}
