#include "codiff/transport.hpp"

#include <set>

namespace codiff {

static void check_values(const GradedSpace& v, const PairTable& table) {
  for (const auto& [key, value] : table) {
    auto [x, y] = key;
    if (x >= v.dim() || y >= v.dim()) throw std::out_of_range("structure constant refers to a missing basis element");
    for (const auto& [k, c] : value)
      if (k >= v.dim() || v.parity(k) != v.parity(x) + v.parity(y))
        throw std::invalid_argument("structure constant '" + v.name(x) + " " + v.name(y) + "' has an output of the wrong parity");
  }
}

Coderivation lie_codifferential(const GradedSpace& v, const PairTable& bracket, int weight_cap) {
  check_values(v, bracket);
  auto co = make_coalgebra(parity_reversion(v), WordKind::symmetric, weight_cap);
  Coderivation d(co, Parity::odd);
  if (weight_cap < 2) {
    for (const auto& kv : bracket)
      if (!kv.second.empty()) throw std::invalid_argument("lie_codifferential: weight cap below 2 drops the bracket");
    return d;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [key, value] : bracket) {
    auto [x, y] = key;
    if (!seen.insert({std::min(x, y), std::max(x, y)}).second)
      throw std::invalid_argument("bracket of '" + v.name(x) + "' and '" + v.name(y) + "' given twice");
    if (x == y && v.parity(x) == Parity::even) {
      if (!value.empty()) throw std::invalid_argument("bracket of the even element '" + v.name(x) + "' with itself must vanish");
      continue;
    }
    d.add(2, {x, y}, value.scaled(v.parity(x) == Parity::odd ? -1 : 1));
  }
  return d;
}

Coderivation assoc_codifferential(const GradedSpace& v, const PairTable& product, int weight_cap) {
  check_values(v, product);
  auto co = make_coalgebra(parity_reversion(v), WordKind::tensor, weight_cap);
  Coderivation d(co, Parity::odd);
  if (weight_cap < 2) {
    for (const auto& kv : product)
      if (!kv.second.empty()) throw std::invalid_argument("assoc_codifferential: weight cap below 2 drops the product");
    return d;
  }
  for (const auto& [key, value] : product) {
    auto [x, y] = key;
    d.add(2, {x, y}, value.scaled(v.parity(x) == Parity::odd ? -1 : 1));
  }
  return d;
}

}  // namespace codiff
