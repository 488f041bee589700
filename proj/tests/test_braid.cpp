#include "braidrep/braid.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/perm.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace braidrep;

namespace {

// Unreduced Burau matrices over Z[t, t^-1], written out here independently of the
// library. Faithful on B_3, so it decides the word problem there; on larger n it
// gives a necessary condition for triviality.
using Laurent = std::map<int, long long>;

Laurent add(Laurent a, const Laurent& b) {
  for (const auto& [e, c] : b)
    if ((a[e] += c) == 0) a.erase(e);
  return a;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      if ((out[ea + eb] += ca * cb) == 0) out.erase(ea + eb);
  return out;
}

using LMatrix = std::vector<std::vector<Laurent>>;

LMatrix lidentity(int n) {
  LMatrix m(static_cast<std::size_t>(n), std::vector<Laurent>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {{0, 1}};
  return m;
}

LMatrix lmul(const LMatrix& a, const LMatrix& b) {
  const std::size_t n = a.size();
  LMatrix out(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a[i][k].empty())
        for (std::size_t j = 0; j < n; ++j) out[i][j] = add(out[i][j], mul(a[i][k], b[k][j]));
  return out;
}

LMatrix burau_letter(int n, int letter) {
  LMatrix m = lidentity(n);
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  if (letter > 0) {
    m[i][i] = {{0, 1}, {1, -1}};
    m[i][i + 1] = {{1, 1}};
    m[i + 1][i] = {{0, 1}};
    m[i + 1][i + 1] = {};
  } else {
    m[i][i] = {};
    m[i][i + 1] = {{0, 1}};
    m[i + 1][i] = {{-1, 1}};
    m[i + 1][i + 1] = {{0, 1}, {-1, -1}};
  }
  return m;
}

bool burau_trivial(const BraidWord& w) {
  LMatrix m = lidentity(w.strands());
  for (int letter : w.letters()) m = lmul(m, burau_letter(w.strands(), letter));
  return m == lidentity(w.strands());
}

Permutation permutation_image(const BraidWord& w) {
  auto p = Permutation::identity(static_cast<std::size_t>(w.strands()));
  for (int letter : w.letters()) {
    const auto i = static_cast<Permutation::Point>(std::abs(letter));
    p = compose(p, Permutation::from_cycles(p.degree(), {{i, i + 1}}));
  }
  return p;
}

}  // namespace

TEST_SUITE("braid") {
  TEST_CASE("word basics") {
    auto w = BraidWord::parse(4, "1, -3,2");
    CHECK(w.letters() == std::vector<int>{1, -3, 2});
    CHECK(w.inverse().letters() == std::vector<int>{-2, 3, -1});
    CHECK(BraidWord::parse(4, "").empty());
    CHECK_THROWS_AS(BraidWord::parse(4, "4"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord::parse(4, "0"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {1}) * BraidWord(4, {1}), std::invalid_argument);
  }

  TEST_CASE("Artin action on generators") {
    const FreeWord x1 = FreeWord::generator(2, 1), x2 = FreeWord::generator(2, 2);
    CHECK(artin_act(BraidWord(2), x1) == x1);
    CHECK(artin_act(BraidWord(2, {1}), x1) == x1 * x2 * x1.inverse());
    CHECK(artin_act(BraidWord(2, {1}), x2) == x1);
    CHECK(artin_act(BraidWord(2, {1, -1}), x2) == x2);
    CHECK(artin_act(BraidWord(2, {-1, 1}), x1 * x2) == x1 * x2);
    CHECK((x1 * x1.inverse()).length() == 0);
  }

  TEST_CASE("word problem on relators and simple words") {
    CHECK(is_identity(BraidWord(3, {1, 2, 1, -2, -1, -2})));
    CHECK(is_identity(BraidWord(5, {1, 3, -1, -3})));
    CHECK_FALSE(is_identity(BraidWord(3, {1})));
    CHECK_FALSE(is_identity(BraidWord(3, {1, 1})));
    CHECK_FALSE(is_identity(BraidWord(4, {1, 2, -1, -2})));
    for (int n = 2; n <= 8; ++n)
      for (const auto& r : defining_relators(n)) CHECK(is_identity(r));
    for (int n = 3; n <= 6; ++n)
      for (int i = 1; i < n; ++i) CHECK(is_identity(commutator(full_twist(n), BraidWord::generator(n, i))));
  }

  TEST_CASE("free-word growth is bounded") {
    // sigma_1 sigma_2^-1 is pseudo-Anosov, so free words grow exponentially under its powers.
    std::vector<int> letters;
    for (int i = 0; i < 30; ++i) letters.insert(letters.end(), {1, -2});
    CHECK_THROWS_AS(is_identity(BraidWord(3, letters), 1000), ResourceLimitExceeded);
  }

  TEST_CASE("word problem agrees with the Burau oracle on B_3") {
    std::mt19937_64 rng(5);
    int trivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
      BraidWord w = trial % 3 == 0 ? random_trivial_word(3, rng) : random_word(3, 2 + trial % 9, rng);
      const bool oracle = burau_trivial(w);
      CHECK_MESSAGE(is_identity(w) == oracle, w.to_string());
      trivial += oracle;
    }
    CHECK(trivial >= 100);
  }

  TEST_CASE("trivial words pass the necessary conditions on larger n") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + trial % 4;
      BraidWord w = random_trivial_word(n, rng);
      REQUIRE(is_identity(w));
      CHECK(burau_trivial(w));
      CHECK(permutation_image(w).is_identity());
      BraidWord u = random_word(n, 6, rng);
      CHECK(is_identity(u * u.inverse()));
      if (!burau_trivial(u)) CHECK_FALSE(is_identity(u));
    }
  }

  TEST_CASE("totally symmetric generator sets") {
    auto x6 = xn_set(6);
    REQUIRE(x6.size() == 3);
    CHECK(x6[0] == BraidWord(6, {1}));
    CHECK(x6[1] == BraidWord(6, {3}));
    CHECK(x6[2] == BraidWord(6, {5}));
    CHECK(xn_set(7).size() == 3);
    CHECK(xn_set(2) == std::vector<BraidWord>{BraidWord(2, {1})});
    CHECK(xn_prime_set(7) == std::vector<BraidWord>{BraidWord(7, {1, -3}), BraidWord(7, {1, -5})});
    CHECK(xn_prime_set(5) == std::vector<BraidWord>{BraidWord(5, {1, -3})});
    CHECK(xn_prime_set(16).size() == 7);
    for (int n = 4; n <= 9; ++n) {
      const auto xs = xn_set(n);
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) CHECK(is_identity(commutator(xs[i], xs[j])));
    }
  }

  TEST_CASE("random words are reproducible from the seed") {
    std::mt19937_64 a(42), b(42);
    CHECK(random_word(6, 20, a) == random_word(6, 20, b));
    CHECK(random_trivial_word(6, a) == random_trivial_word(6, b));
  }
}
