#include "codiff/coderiv.hpp"

#include <cstdlib>
#include <string>

#include "codiff/kernels.hpp"

namespace codiff {

std::size_t max_words_limit() {
  const char* env = std::getenv("CODIFF_MAX_WORDS");
  if (env) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

// ---------------------------------------------------------------- WordBasis

static void enumerate_words(const GradedSpace& space, WordKind kind, std::size_t length, Letters& cur,
                            std::vector<Letters>& out) {
  if (cur.size() == length) {
    out.push_back(cur);
    return;
  }
  std::size_t start = 0;
  if (kind == WordKind::symmetric && !cur.empty()) {
    start = cur.back();
    if (space.parity(start) == Parity::odd) ++start;
  }
  for (std::size_t x = start; x < space.dim(); ++x) {
    cur.push_back(x);
    enumerate_words(space, kind, length, cur, out);
    cur.pop_back();
  }
}

WordBasis::WordBasis(const GradedSpace& space, WordKind kind, int length) {
  if (length < 1) throw std::invalid_argument("WordBasis: length must be positive");
  Letters cur;
  enumerate_words(space, kind, static_cast<std::size_t>(length), cur, words_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    parities_.push_back(word_parity(words_[i], space));
    index_.emplace(words_[i], i);
  }
}

std::optional<std::size_t> WordBasis::index_of(const Letters& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- Coalgebra

static double word_count(const GradedSpace& space, WordKind kind, int n) {
  double d = static_cast<double>(space.dim());
  if (kind == WordKind::tensor) {
    double c = 1;
    for (int i = 0; i < n; ++i) c *= d;
    return c;
  }
  std::size_t odd = 0;
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (space.parity(i) == Parity::odd) ++odd;
  double e = static_cast<double>(space.dim() - odd);
  auto binom = [](double a, int b) {
    double r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r < 0 ? 0 : r;
  };
  double total = 0;
  for (int j = 0; j <= n && j <= static_cast<int>(odd); ++j) {
    int rest = n - j;
    double multisets = (e == 0) ? (rest == 0 ? 1 : 0) : binom(e + rest - 1, rest);
    total += binom(static_cast<double>(odd), j) * multisets;
  }
  return total;
}

Coalgebra::Coalgebra(GradedSpace space, WordKind kind, int weight_cap)
    : space_(std::move(space)), kind_(kind), cap_(weight_cap) {
  if (cap_ < 1) throw std::invalid_argument("Coalgebra: weight cap must be at least 1");
  double estimate = 0;
  for (int n = 1; n <= cap_; ++n) estimate += word_count(space_, kind_, n);
  std::size_t limit = max_words_limit();
  if (estimate > static_cast<double>(limit))
    throw ResourceLimitError("word enumeration would produce " + std::to_string(static_cast<long long>(estimate)) +
                             " words, above the limit " + std::to_string(limit) + " (CODIFF_MAX_WORDS)");
  for (int n = 1; n <= cap_; ++n) {
    words_.emplace_back(space_, kind_, n);
    total_ += words_.back().size();
  }
}

const WordBasis& Coalgebra::words(int length) const {
  if (length < 1 || length > cap_) throw std::out_of_range("Coalgebra::words: length outside 1..cap");
  return words_[static_cast<std::size_t>(length - 1)];
}

CoalgebraPtr make_coalgebra(GradedSpace space, WordKind kind, int weight_cap) {
  return std::make_shared<const Coalgebra>(std::move(space), kind, weight_cap);
}

// ---------------------------------------------------------------- MultilinearPart

void MultilinearPart::add(const Letters& word, const SparseVector& value, const GradedSpace& space) {
  if (static_cast<int>(word.size()) != arity_) throw std::invalid_argument("MultilinearPart::add: word length differs from arity");
  if (value.empty()) return;
  Parity in = word_parity(word, space);
  for (const auto& [j, v] : value) {
    if (j >= space.dim()) throw std::out_of_range("MultilinearPart::add: output index outside the space");
    if (space.parity(j) != parity_ + in) throw std::invalid_argument("MultilinearPart::add: output parity inconsistent with part parity");
  }
  SignedWord c = canonicalize(kind_, word, space);
  if (c.sign == 0) throw std::invalid_argument("MultilinearPart::add: word with a repeated odd letter is zero");
  auto& slot = table_[c.letters];
  slot.add_scaled(value, c.sign);
  if (slot.empty()) table_.erase(c.letters);
}

SparseVector MultilinearPart::apply(const Letters& word, const GradedSpace& space) const {
  if (static_cast<int>(word.size()) != arity_ || table_.empty()) return {};
  SignedWord c = canonicalize(kind_, word, space);
  if (c.sign == 0) return {};
  auto it = table_.find(c.letters);
  if (it == table_.end()) return {};
  return c.sign == 1 ? it->second : it->second.scaled(-1);
}

// ---------------------------------------------------------------- Coderivation

Coderivation::Coderivation(CoalgebraPtr coalgebra, Parity parity) : coalgebra_(std::move(coalgebra)), parity_(parity) {
  if (!coalgebra_) throw std::invalid_argument("Coderivation: null coalgebra");
  for (int k = 1; k <= coalgebra_->weight_cap(); ++k) parts_.emplace_back(coalgebra_->kind(), k, parity_);
}

const MultilinearPart& Coderivation::part(int arity) const {
  if (arity < 1 || arity > weight_cap()) throw std::out_of_range("Coderivation::part: arity outside 1..cap");
  return parts_[static_cast<std::size_t>(arity - 1)];
}

void Coderivation::add(int arity, const Letters& word, const SparseVector& value) {
  if (arity < 1 || arity > weight_cap()) throw std::out_of_range("Coderivation::add: arity outside 1..cap");
  parts_[static_cast<std::size_t>(arity - 1)].add(word, value, space());
}

void Coderivation::add_part(const MultilinearPart& p, const Rational& scale) {
  if (p.is_zero() || scale == 0) return;
  if (p.kind() != kind() || p.parity() != parity_) throw std::invalid_argument("Coderivation::add_part: kind or parity mismatch");
  for (const auto& [w, v] : p.table()) add(p.arity(), w, v.scaled(scale));
}

SparseVector Coderivation::apply(const Letters& word) const {
  int n = static_cast<int>(word.size());
  if (n < 1 || n > weight_cap()) return {};
  return parts_[static_cast<std::size_t>(n - 1)].apply(word, space());
}

bool Coderivation::is_zero() const {
  for (const auto& p : parts_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<int> Coderivation::nonzero_arities() const {
  std::vector<int> out;
  for (const auto& p : parts_)
    if (!p.is_zero()) out.push_back(p.arity());
  return out;
}

Coderivation Coderivation::scaled(const Rational& s) const {
  Coderivation out(coalgebra_, parity_);
  if (s == 0) return out;
  out.parts_ = parts_;
  for (auto& p : out.parts_) {
    MultilinearPart q(p.kind(), p.arity(), p.parity());
    for (const auto& [w, v] : p.table()) q.add(w, v.scaled(s), space());
    p = std::move(q);
  }
  return out;
}

void Coderivation::check_compatible(const Coderivation& o) const {
  if (coalgebra_ != o.coalgebra_ && !coalgebra_->same_shape(*o.coalgebra_))
    throw std::invalid_argument("coderivations live on different coalgebras (kind, space or weight cap differ)");
}

Coderivation& Coderivation::operator+=(const Coderivation& o) {
  check_compatible(o);
  if (o.parity_ != parity_ && !o.is_zero()) throw std::invalid_argument("Coderivation: adding elements of different parity");
  for (const auto& p : o.parts_) add_part(p, 1);
  return *this;
}

Coderivation& Coderivation::operator-=(const Coderivation& o) {
  check_compatible(o);
  if (o.parity_ != parity_ && !o.is_zero()) throw std::invalid_argument("Coderivation: subtracting elements of different parity");
  for (const auto& p : o.parts_) add_part(p, -1);
  return *this;
}

Coderivation Coderivation::recapped(const CoalgebraPtr& target) const {
  if (target->kind() != kind() || !(target->space() == space()))
    throw std::invalid_argument("Coderivation::recapped: kind or space differ");
  Coderivation out(target, parity_);
  for (const auto& p : parts_)
    if (p.arity() <= target->weight_cap()) out.parts_[static_cast<std::size_t>(p.arity() - 1)] = p;
  return out;
}

bool operator==(const Coderivation& a, const Coderivation& b) {
  if (!a.coalgebra_->same_shape(*b.coalgebra_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.parity_ == b.parity_ && a.parts_ == b.parts_;
}

// ---------------------------------------------------------------- evaluation

WordSum evaluate(const Coderivation& c, const Word& word) {
  if (word.kind != c.kind()) throw std::invalid_argument("evaluate: word kind differs from coderivation kind");
  const GradedSpace& space = c.space();
  const Letters& w = word.letters;
  std::size_t n = w.size();
  WordSum out;
  auto accumulate = [&](const Letters& raw, const Rational& coef) {
    SignedWord cw = canonicalize(c.kind(), raw, space);
    if (cw.sign == 0) return;
    Rational& slot = out[cw.letters];
    slot += cw.sign == 1 ? coef : Rational(-coef);
  };
  for (std::size_t k = 1; k <= n && static_cast<int>(k) <= c.weight_cap(); ++k) {
    const MultilinearPart& part = c.part(static_cast<int>(k));
    if (part.is_zero()) continue;
    if (c.kind() == WordKind::symmetric) {
      std::vector<Parity> par(n);
      for (std::size_t i = 0; i < n; ++i) par[i] = space.parity(w[i]);
      for (const Permutation& sigma : unshuffles(k, n - k)) {
        int eps = koszul_sign(sigma, par);
        Letters inner(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(k));
        for (auto& x : inner) x = w[x];
        SparseVector val = part.apply(inner, space);
        if (val.empty()) continue;
        for (const auto& [j, v] : val) {
          Letters raw{j};
          for (std::size_t i = k; i < n; ++i) raw.push_back(w[sigma[i]]);
          accumulate(raw, v * eps);
        }
      }
    } else {
      Parity prefix = Parity::even;
      for (std::size_t i = 0; i + k <= n; ++i) {
        int s = sign_of(prefix, c.parity());
        Letters inner(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + k));
        SparseVector val = part.apply(inner, space);
        for (const auto& [j, v] : val) {
          Letters raw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          raw.push_back(j);
          raw.insert(raw.end(), w.begin() + static_cast<std::ptrdiff_t>(i + k), w.end());
          accumulate(raw, v * s);
        }
        prefix = prefix + space.parity(w[i]);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

SparseVector bracket_entry(const Coderivation& a, const Coderivation& b, const Letters& word) {
  SparseVector out;
  auto compose = [&](const Coderivation& outer, const Coderivation& inner, const Rational& scale) {
    for (const auto& [x, coef] : evaluate(inner, Word{inner.kind(), word})) {
      if (static_cast<int>(x.size()) > outer.weight_cap()) continue;
      SparseVector v = outer.apply(x);
      if (!v.empty()) out.add_scaled(v, coef * scale);
    }
  };
  compose(a, b, 1);
  compose(b, a, -sign_of(a.parity(), b.parity()));
  return out;
}

Coderivation bracket(const Coderivation& a, const Coderivation& b) {
  return kernels::bracket(a, b, kernels::Mode::parallel);
}

bool is_codifferential(const Coderivation& d) { return !codifferential_defect(d).has_value(); }

std::optional<int> codifferential_defect(const Coderivation& d) {
  if (d.parity() != Parity::odd) throw std::invalid_argument("is_codifferential: the coderivation must be odd");
  Coderivation sq = bracket(d, d);
  auto nz = sq.nonzero_arities();
  if (nz.empty()) return std::nullopt;
  return nz.front();
}

Coderivation big_d(const Coderivation& d, const Coderivation& phi) { return bracket(d, phi); }

const MultilinearPart& weight_component(const Coderivation& c, int n) { return c.part(n); }

}  // namespace codiff
