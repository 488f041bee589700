#include "braidrep/scalar.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace braidrep;

namespace {

// Leibniz expansion over all permutations: independent of the elimination code.
BigInt leibniz_determinant(const IntMatrix& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IntMatrix random_matrix(Eigen::Index n, std::mt19937_64& rng, int spread = 4) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("binomial agrees with Pascal's triangle") {
    std::vector<std::vector<BigInt>> pascal(61);
    for (std::size_t n = 0; n <= 60; ++n) {
      pascal[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (long n = 0; n <= 60; ++n) {
      for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
      CHECK(binomial(n, -1) == 0);
      CHECK(binomial(n, n + 1) == 0);
    }
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  }

  TEST_CASE("power and bigint_json") {
    CHECK(power(2, 100) == BigInt("1267650600228229401496703205376"));
    CHECK(power(-3, 3) == -27);
    CHECK(power(7, 0) == 1);
    CHECK(bigint_json(BigInt(-42)) == nlohmann::json(-42));
    CHECK(bigint_json(power(2, 100)) == nlohmann::json("1267650600228229401496703205376"));
  }

  TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
    std::mt19937_64 rng(7);
    for (Eigen::Index n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(n, rng, trial % 2 ? 1 : 5);
        CHECK(determinant(m) == leibniz_determinant(m));
      }
    IntMatrix zero_pivot(2, 2);
    zero_pivot << 0, 1, 1, 0;
    CHECK(determinant(zero_pivot) == -1);
  }

  TEST_CASE("characteristic polynomial: Cayley-Hamilton and determinant") {
    std::mt19937_64 rng(11);
    for (Eigen::Index n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a = random_matrix(n, rng);
        auto poly = characteristic_polynomial(a);
        REQUIRE(poly.size() == static_cast<std::size_t>(n) + 1);
        CHECK(poly.front() == 1);
        BigInt sign = n % 2 ? -1 : 1;
        CHECK(poly.back() == sign * determinant(a));
        BigInt trace = 0;
        for (Eigen::Index i = 0; i < n; ++i) trace += a(i, i);
        CHECK(poly[1] == -trace);
        // Horner with matrices: p(A) = 0.
        IntMatrix acc = zero_matrix<BigInt>(n, n);
        for (const auto& c : poly) {
          acc = multiply(acc, a);
          for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += c;
        }
        CHECK(exactly_equal(acc, zero_matrix<BigInt>(n, n)));
      }
  }

  TEST_CASE("matrix_power by squaring agrees with repeated products") {
    std::mt19937_64 rng(3);
    IntMatrix a = random_matrix(3, rng, 2);
    IntMatrix slow = identity_matrix<BigInt>(3);
    for (unsigned long e = 0; e <= 9; ++e) {
      CHECK(exactly_equal(matrix_power(a, e), slow));
      slow = multiply(slow, a);
    }
  }
}
