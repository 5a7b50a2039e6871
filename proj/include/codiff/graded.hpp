#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codiff {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity flip(Parity p) { return p + Parity::odd; }
constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity parity_of(int n) { return (n & 1) ? Parity::odd : Parity::even; }
// (-1)^{|a||b|}
constexpr int sign_of(Parity a, Parity b) { return (a == Parity::odd && b == Parity::odd) ? -1 : 1; }
std::string to_string(Parity p);
std::optional<Parity> parse_parity(const std::string& s);

struct BasisElement {
  std::string name;
  Parity parity;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);

  std::size_t dim() const { return basis_.size(); }
  const BasisElement& operator[](std::size_t i) const { return basis_.at(i); }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  const std::string& name(std::size_t i) const { return basis_.at(i).name; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::vector<Parity> parities() const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<BasisElement> basis_;
};

GradedSpace parity_reversion(const GradedSpace& v);

// One-line notation: perm[i] is the original position of the letter placed at slot i.
using Permutation = std::vector<std::size_t>;

// Sign of rearranging letters v_0..v_{n-1} (parities indexed by original
// position) into v_{perm[0]}..v_{perm[n-1]}.
int koszul_sign(const Permutation& perm, const std::vector<Parity>& parities);
int sign_of_permutation(const Permutation& perm);
std::vector<Permutation> unshuffles(std::size_t k, std::size_t l);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // (sigma∘tau)[i] = sigma[tau[i]]

enum class WordKind : std::uint8_t { symmetric, tensor };
std::string to_string(WordKind k);

using Letters = std::vector<std::size_t>;

struct Word {
  WordKind kind;
  Letters letters;
  friend bool operator==(const Word&, const Word&) = default;
};

// Canonical form of a word with the sign picked up on the way. For the
// symmetric kind letters are sorted by index; a repeated odd letter gives sign 0.
struct SignedWord {
  int sign;
  Letters letters;
};
SignedWord canonicalize(WordKind kind, const Letters& letters, const GradedSpace& space);
Parity word_parity(const Letters& letters, const GradedSpace& space);

}  // namespace codiff
