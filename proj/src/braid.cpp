#include "braidrep/braid.hpp"

#include "braidrep/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidrep {

namespace {

void append_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

void append_reduced(std::vector<int>& out, const std::vector<int>& word, bool inverted) {
  if (!inverted) {
    for (int x : word) append_reduced(out, x);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) append_reduced(out, -*it);
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
  for (int x : letters_)
    if (x == 0 || std::abs(x) > strands_ - 1)
      throw std::invalid_argument("BraidWord: letter " + std::to_string(x) + " out of range for B_" +
                                  std::to_string(strands_));
}

BraidWord BraidWord::generator(int strands, int index, int exponent) {
  std::vector<int> letters(static_cast<std::size_t>(std::abs(exponent)), exponent < 0 ? -index : index);
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("BraidWord::parse: bad token '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("BraidWord::parse: bad token '" + token + "'");
    letters.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (token.empty()) throw std::invalid_argument("BraidWord::parse: empty letter");
      flush();
    } else if (c != ' ' && c != '\t' && c != '\n') {
      token.push_back(c);
    }
  }
  flush();
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  return BraidWord(strands_, std::move(inv));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ',';
    out << letters_[i];
  }
  return out.str();
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("BraidWord: strand counts differ");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
  if (rank_ < 1) throw std::invalid_argument("FreeWord: rank must be positive");
  for (int x : letters) {
    if (x == 0 || std::abs(x) > rank_) throw std::invalid_argument("FreeWord: letter out of range");
    append_reduced(letters_, x);
  }
}

FreeWord FreeWord::generator(int rank, int index) { return FreeWord(rank, {index}); }

FreeWord FreeWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  return FreeWord(rank_, std::move(inv));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << std::abs(letters_[i]);
    if (letters_[i] < 0) out << "^-1";
  }
  return out.str();
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("FreeWord: ranks differ");
  std::vector<int> letters = a.letters();
  append_reduced(letters, b.letters(), false);
  return FreeWord(a.rank(), std::move(letters));
}

ArtinAutomorphism::ArtinAutomorphism(const BraidWord& b, std::size_t max_letters)
    : rank_(b.strands()), max_letters_(max_letters) {
  images_.reserve(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i) images_.push_back(FreeWord::generator(rank_, i));

  // phi_{w s} = phi_w o phi_s: only the two generators moved by s change, and their
  // new images are the old images substituted into phi_s(x).
  for (int letter : b.letters()) {
    auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    const std::vector<int>& xi = images_[i].letters();
    const std::vector<int>& xj = images_[i + 1].letters();
    std::vector<int> new_i;
    std::vector<int> new_j;
    if (letter > 0) {
      append_reduced(new_i, xi, false);
      append_reduced(new_i, xj, false);
      append_reduced(new_i, xi, true);
      new_j = xi;
    } else {
      new_i = xj;
      append_reduced(new_j, xj, true);
      append_reduced(new_j, xi, false);
      append_reduced(new_j, xj, false);
    }
    if (new_i.size() > max_letters_ || new_j.size() > max_letters_)
      throw ResourceLimitExceeded("artin action: free word exceeds " + std::to_string(max_letters_) + " letters");
    images_[i] = FreeWord(rank_, std::move(new_i));
    images_[i + 1] = FreeWord(rank_, std::move(new_j));
  }
}

FreeWord ArtinAutomorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("artin action: free word rank differs from strand count");
  std::vector<int> out;
  for (int x : w.letters()) {
    append_reduced(out, images_[static_cast<std::size_t>(std::abs(x) - 1)].letters(), x < 0);
    if (out.size() > max_letters_)
      throw ResourceLimitExceeded("artin action: free word exceeds " + std::to_string(max_letters_) + " letters");
  }
  return FreeWord(rank_, std::move(out));
}

bool ArtinAutomorphism::is_identity() const {
  for (int i = 0; i < rank_; ++i) {
    const auto& letters = images_[static_cast<std::size_t>(i)].letters();
    if (letters.size() != 1 || letters.front() != i + 1) return false;
  }
  return true;
}

FreeWord artin_act(const BraidWord& b, const FreeWord& w, std::size_t max_letters) {
  if (w.rank() != b.strands()) throw std::invalid_argument("artin_act: free word rank differs from strand count");
  return ArtinAutomorphism(b, max_letters).apply(w);
}

bool is_identity(const BraidWord& b, std::size_t max_letters) {
  return ArtinAutomorphism(b, max_letters).is_identity();
}

std::vector<BraidWord> xn_set(int n) {
  if (n < 2) throw std::invalid_argument("xn_set: need n >= 2");
  std::vector<BraidWord> out;
  for (int i = 1; i < n; i += 2) out.push_back(BraidWord::generator(n, i));
  return out;
}

std::vector<BraidWord> xn_prime_set(int n) {
  if (n < 4) throw std::invalid_argument("xn_prime_set: need n >= 4");
  std::vector<BraidWord> out;
  for (int i = 3; i < n; i += 2) out.push_back(BraidWord(n, {1, -i}));
  return out;
}

std::vector<BraidWord> defining_relators(int n) {
  std::vector<BraidWord> out;
  for (int i = 1; i + 1 < n; ++i) out.push_back(BraidWord(n, {i, i + 1, i, -(i + 1), -i, -(i + 1)}));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) out.push_back(BraidWord(n, {i, j, -i, -j}));
  return out;
}

BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(coin(rng) ? pick(rng) : -pick(rng));
  return BraidWord(n, std::move(letters));
}

BraidWord full_twist(int n) {
  std::vector<int> letters;
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord random_trivial_word(int n, std::mt19937_64& rng) {
  const auto relators = defining_relators(n);
  std::uniform_int_distribution<std::size_t> which(0, relators.size());
  std::uniform_int_distribution<std::size_t> length(0, 6);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> gen(1, n - 1);
  BraidWord out(n);
  for (int c = count(rng); c > 0; --c) {
    std::size_t idx = which(rng);
    BraidWord r = idx < relators.size() ? relators[idx] : commutator(full_twist(n), BraidWord::generator(n, gen(rng)));
    if (coin(rng)) r = r.inverse();
    BraidWord u = random_word(n, length(rng), rng);
    out = out * u * r * u.inverse();
  }
  return out;
}

}  // namespace braidrep
