#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

inline constexpr std::size_t kDefaultMaxFreeLetters = 1'000'000;

/// A word in the Artin generators of B_n. Letter +i is sigma_i, -i its inverse.
/// The word is kept exactly as written; no cancellation happens eagerly.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  static BraidWord generator(int strands, int index, int exponent = 1);
  /// Comma-separated signed indices, e.g. "1,-3,2". Whitespace is ignored; "" is the identity.
  static BraidWord parse(int strands, std::string_view text);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Reversed sequence of negated letters.
  BraidWord inverse() const;
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Concatenation; both words must have the same strand count.
BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord commutator(const BraidWord& a, const BraidWord& b);

/// A freely reduced word in the free group of the given rank.
class FreeWord {
 public:
  explicit FreeWord(int rank, std::vector<int> letters = {});

  static FreeWord generator(int rank, int index);

  int rank() const noexcept { return rank_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  FreeWord inverse() const;
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<int> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);

/// The automorphism of F_n attached to a braid word, stored as the images of x_1..x_n.
/// sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i; a word acts as the
/// composite of its letters, leftmost outermost.
class ArtinAutomorphism {
 public:
  explicit ArtinAutomorphism(const BraidWord& b, std::size_t max_letters = kDefaultMaxFreeLetters);

  const FreeWord& image_of_generator(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }
  FreeWord apply(const FreeWord& w) const;
  bool is_identity() const;

 private:
  int rank_;
  std::size_t max_letters_;
  std::vector<FreeWord> images_;
};

/// Image of w under the Artin action of b. Throws std::invalid_argument on a rank
/// mismatch and ResourceLimitExceeded when an intermediate word outgrows max_letters.
FreeWord artin_act(const BraidWord& b, const FreeWord& w, std::size_t max_letters = kDefaultMaxFreeLetters);

/// Word problem: b is trivial in B_n iff it fixes every free generator.
bool is_identity(const BraidWord& b, std::size_t max_letters = kDefaultMaxFreeLetters);

/// Odd-indexed generators sigma_1, sigma_3, ..., sigma_l with l the largest odd integer < n.
std::vector<BraidWord> xn_set(int n);
/// Words sigma_1 sigma_i^-1 for odd i with 3 <= i < n.
std::vector<BraidWord> xn_prime_set(int n);

/// Braid relators sigma_i sigma_{i+1} sigma_i sigma_{i+1}^-1 sigma_i^-1 sigma_{i+1}^-1 and
/// commutators [sigma_i, sigma_j] for |i - j| >= 2.
std::vector<BraidWord> defining_relators(int n);

/// Uniformly random letters, no reduction.
BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng);
/// Product of 1-3 random conjugates of defining relators (or of the commutator of the
/// full twist with a generator), so trivial in B_n by construction.
BraidWord random_trivial_word(int n, std::mt19937_64& rng);
/// Full twist (sigma_1 ... sigma_{n-1})^n, central in B_n.
BraidWord full_twist(int n);

}  // namespace braidrep
