#include "braidrep/perm.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace braidrep;

namespace {

Permutation cyc(std::size_t m, std::initializer_list<std::initializer_list<Permutation::Point>> c) {
  return Permutation::from_cycles(m, c);
}

// Cycle type by marking orbits directly on the image array.
std::vector<std::size_t> traced_cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("composition applies the right factor first") {
    const auto id = Permutation::identity(3);
    const auto s12 = cyc(3, {{1, 2}});
    const auto s23 = cyc(3, {{2, 3}});
    CHECK(compose(s12, id) == s12);
    CHECK(compose(s12, s12).is_identity());
    const auto p = compose(s12, s23);
    for (std::size_t i = 0; i < 3; ++i) CHECK(p[i] == s12[s23[i]]);
    CHECK(p == Permutation::from_one_based({2, 3, 1}));
    CHECK_THROWS_AS(compose(s12, Permutation::identity(4)), std::invalid_argument);
  }

  TEST_CASE("constructor rejects non-bijections") {
    CHECK_THROWS_AS(Permutation(std::vector<Permutation::Point>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<Permutation::Point>{0, 2}), std::invalid_argument);
  }

  TEST_CASE("conjugation") {
    const auto p = cyc(3, {{1, 2}});
    CHECK(conjugate(p, Permutation::identity(3)) == p);
    const auto h = cyc(3, {{2, 3}});
    const auto c = conjugate(p, h);
    CHECK(c == cyc(3, {{1, 3}}));
    CHECK(c == compose(compose(h, p), h.inverse()));
    const auto all = all_permutations(4);
    REQUIRE(all.size() == 24);
    for (const auto& x : all)
      for (const auto& y : all) CHECK(cycle_type(conjugate(x, y)) == cycle_type(x));
  }

  TEST_CASE("cycle types") {
    CHECK(cycle_type(Permutation::identity(4)) == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(cycle_type(cyc(4, {{1, 2}, {3, 4}})) == std::vector<std::size_t>{2, 2});
    CHECK(cycle_type(cyc(5, {{1, 2, 3}})) == std::vector<std::size_t>{3, 1, 1});
    for (const auto& p : all_permutations(5)) CHECK(p.cycle_type() == traced_cycle_type(p));
  }

  TEST_CASE("order, powers and inverse") {
    for (const auto& p : all_permutations(5)) {
      std::uint64_t e = 1;
      auto q = p;
      while (!q.is_identity()) {
        q = compose(q, p);
        ++e;
      }
      CHECK(p.order() == e);
      CHECK(compose(p, p.inverse()).is_identity());
      CHECK(p.pow(-1) == p.inverse());
      CHECK(p.pow(static_cast<long>(e) + 1) == p);
    }
  }

  TEST_CASE("transitivity") {
    const auto full = Permutation::from_one_based({2, 3, 4, 5, 1});
    CHECK(is_transitive(std::vector<Permutation>{full}));
    CHECK_FALSE(is_transitive(std::vector<Permutation>{cyc(3, {{1, 2}})}));
    std::vector<Permutation> adj{cyc(5, {{1, 2}}), cyc(5, {{2, 3}}), cyc(5, {{3, 4}}), cyc(5, {{4, 5}})};
    CHECK(is_transitive(adj));
    CHECK(orbits(std::vector<Permutation>{cyc(5, {{1, 2}}), cyc(5, {{4, 5}})}, 5).size() == 3);
  }

  TEST_CASE("generated group orders") {
    std::vector<Permutation> s4{cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})};
    CHECK(generated_group_order(s4, 4) == 24);
    std::vector<Permutation> a4{cyc(4, {{1, 2, 3}}), cyc(4, {{2, 3, 4}})};
    CHECK(generated_group_order(a4, 4) == 12);
    std::vector<Permutation> klein{cyc(4, {{1, 2}}), cyc(4, {{3, 4}})};
    CHECK(generated_group_order(klein, 4) == 4);
  }

  TEST_CASE("partitions and canonical representatives") {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (std::size_t m = 0; m < counts.size(); ++m) CHECK(integer_partitions(m).size() == counts[m]);
    for (const auto& type : integer_partitions(6)) {
      auto p = canonical_of_cycle_type(6, type);
      CHECK(p.cycle_type() == type);
    }
  }

  TEST_CASE("cycle string and JSON use 1-based points") {
    const auto p = cyc(4, {{1, 3}, {2, 4}});
    CHECK(p.to_cycle_string() == "(1 3)(2 4)");
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
    nlohmann::json j = p;
    CHECK(j == nlohmann::json::parse("[3,4,1,2]"));
    CHECK(j.get<Permutation>() == p);
  }
}
