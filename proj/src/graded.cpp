#include "codiff/graded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace codiff {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::optional<Parity> parse_parity(const std::string& s) {
  if (s == "even" || s == "0") return Parity::even;
  if (s == "odd" || s == "1") return Parity::odd;
  return std::nullopt;
}

std::string to_string(WordKind k) { return k == WordKind::symmetric ? "symmetric" : "tensor"; }

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.name.empty()) throw std::invalid_argument("GradedSpace: empty basis name");
    if (!seen.insert(b.name).second) throw std::invalid_argument("GradedSpace: duplicate basis name '" + b.name + "'");
  }
}

std::optional<std::size_t> GradedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::vector<Parity> GradedSpace::parities() const {
  std::vector<Parity> out;
  for (const auto& b : basis_) out.push_back(b.parity);
  return out;
}

GradedSpace parity_reversion(const GradedSpace& v) {
  std::vector<BasisElement> b = v.basis();
  for (auto& e : b) e.parity = flip(e.parity);
  return GradedSpace(std::move(b));
}

static void check_permutation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t x : perm) {
    if (x >= perm.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

int koszul_sign(const Permutation& perm, const std::vector<Parity>& parities) {
  if (perm.size() != parities.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  check_permutation(perm);
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s *= sign_of(parities[perm[i]], parities[perm[j]]);
  return s;
}

int sign_of_permutation(const Permutation& perm) {
  return koszul_sign(perm, std::vector<Parity>(perm.size(), Parity::odd));
}

std::vector<Permutation> unshuffles(std::size_t k, std::size_t l) {
  std::size_t n = k + l;
  std::vector<Permutation> out;
  std::vector<std::size_t> first(k);
  for (std::size_t i = 0; i < k; ++i) first[i] = i;
  while (true) {
    Permutation p(first);
    std::vector<bool> used(n, false);
    for (auto x : first) used[x] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) p.push_back(i);
    out.push_back(std::move(p));
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && first[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++first[i - 1];
    for (std::size_t j = i; j < k; ++j) first[j] = first[j - 1] + 1;
  }
  return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("compose: length mismatch");
  Permutation out(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[tau[i]];
  return out;
}

SignedWord canonicalize(WordKind kind, const Letters& letters, const GradedSpace& space) {
  for (auto x : letters)
    if (x >= space.dim()) throw std::out_of_range("canonicalize: letter outside the space");
  if (kind == WordKind::tensor) return {1, letters};
  Letters w = letters;
  int s = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      s *= sign_of(space.parity(w[j - 1]), space.parity(w[j]));
      std::swap(w[j - 1], w[j]);
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && space.parity(w[i]) == Parity::odd) return {0, w};
  return {s, w};
}

Parity word_parity(const Letters& letters, const GradedSpace& space) {
  Parity p = Parity::even;
  for (auto x : letters) p = p + space.parity(x);
  return p;
}

}  // namespace codiff
