#include "braidrep/errors.hpp"
#include "braidrep/homsearch.hpp"
#include "braidrep/tss.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace braidrep;

namespace {

Permutation cyc(std::size_t m, std::initializer_list<std::initializer_list<Permutation::Point>> c) {
  return Permutation::from_cycles(m, c);
}

// Straight from the definition: pairwise commuting, and every reordering of the
// set is realized by one conjugation.
bool oracle_totally_symmetric(const std::vector<Permutation>& xs) {
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (a * b != b * a) return false;
  const auto group = all_permutations(xs.front().degree());
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool realized = std::any_of(group.begin(), group.end(), [&](const Permutation& h) {
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (conjugate(xs[i], h) != xs[order[i]]) return false;
      return true;
    });
    if (!realized) return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

}  // namespace

TEST_SUITE("tss") {
  TEST_CASE("total symmetry on small sets") {
    std::vector<Permutation> klein{cyc(4, {{1, 2}}), cyc(4, {{3, 4}})};
    auto r = is_totally_symmetric(klein);
    CHECK(r.holds);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == cyc(4, {{1, 3}, {2, 4}}));

    std::vector<Permutation> clash{cyc(3, {{1, 2}}), cyc(3, {{1, 3}})};
    auto c = is_totally_symmetric(clash);
    CHECK_FALSE(c.holds);
    CHECK(c.non_commuting.has_value());

    std::vector<Permutation> single{cyc(5, {{1, 2, 3}})};
    CHECK(is_totally_symmetric(single).holds);

    std::vector<Permutation> lopsided{cyc(4, {{1, 2}}), cyc(4, {{1, 2}, {3, 4}})};
    auto l = is_totally_symmetric(lopsided);
    CHECK_FALSE(l.holds);
    CHECK(l.unrealized_transposition.has_value());

    std::vector<Permutation> big{Permutation::identity(10), cyc(10, {{1, 2}})};
    CHECK_THROWS_AS(is_totally_symmetric(big), ResourceLimitExceeded);
  }

  TEST_CASE("total symmetry agrees with the definition on Sigma_4") {
    const auto group = all_permutations(4);
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        std::vector<Permutation> pair{group[i], group[j]};
        CHECK(is_totally_symmetric(pair).holds == oracle_totally_symmetric(pair));
        for (std::size_t k = j + 1; k < group.size(); k += 3) {
          std::vector<Permutation> triple{group[i], group[j], group[k]};
          CHECK(is_totally_symmetric(triple).holds == oracle_totally_symmetric(triple));
        }
      }
  }

  TEST_CASE("image dichotomy") {
    std::vector<Permutation> same(3, cyc(4, {{1, 2}}));
    CHECK(check_image_dichotomy(3, same) == ImageVerdict::singleton);
    std::vector<Permutation> klein{cyc(4, {{1, 2}}), cyc(4, {{3, 4}})};
    CHECK(check_image_dichotomy(2, klein) == ImageVerdict::full_cardinality);
    std::vector<Permutation> bad{cyc(4, {{1, 2}}), cyc(4, {{1, 2}}), cyc(4, {{3, 4}})};
    CHECK(check_image_dichotomy(3, bad) == ImageVerdict::violation);
    CHECK(to_string(ImageVerdict::full_cardinality) == "full-cardinality");
  }

  TEST_CASE("image dichotomy over every homomorphism B_5 -> Sigma_5") {
    const auto xs = xn_set(5);
    for (const auto& h : enumerate_homs(5, 5).orbits) {
      std::vector<Permutation> images;
      for (const auto& x : xs) images.push_back(h.evaluate(x));
      CHECK(check_image_dichotomy(xs.size(), images) != ImageVerdict::violation);
    }
  }

  TEST_CASE("order bound") {
    std::vector<Permutation> one{cyc(3, {{1, 2, 3}})};
    auto a = min_order_bound_check(one);
    CHECK(a.holds);
    CHECK(a.bound == 1);
    std::vector<Permutation> klein{cyc(4, {{1, 2}}), cyc(4, {{3, 4}})};
    auto b = min_order_bound_check(klein);
    CHECK(b.group_order == 4);
    CHECK(b.bound == 2);
    CHECK(b.holds);
  }

  TEST_CASE("scan of totally symmetric sets") {
    for (std::size_t m = 1; m <= 6; ++m) CHECK(scan_totally_symmetric_sets(m, 3).violations.empty());
    auto r = scan_totally_symmetric_sets(6, 3);
    CHECK(r.sets_by_size == std::vector<std::size_t>{0, 11, 27, 8});
    // One singleton per conjugacy class of Sigma_6.
    CHECK(r.sets_by_size[1] == integer_partitions(6).size());
  }

  TEST_CASE("allowed label sizes") {
    CHECK(allowed_label_sizes(13, 72) == std::vector<int>{0, 1, 12, 13});
    CHECK(allowed_label_sizes(4, 5) == std::vector<int>{0, 1, 3, 4});
    for (int cap = 3; cap <= 40; ++cap) CHECK(allowed_label_sizes(3, cap) == std::vector<int>{0, 1, 2, 3});
    for (int k = 1; k <= 40; ++k)
      for (int cap : {0, 1, 5, 72, 1000, 1000000}) {
        std::vector<int> oracle;
        for (int l = 0; l <= k; ++l)
          if (binomial(k, l) <= cap) oracle.push_back(l);
        CHECK(allowed_label_sizes(k, cap) == oracle);
      }
  }

  TEST_CASE("capacities and the label-size classification") {
    CHECK(multicurve_capacity(23) == 72);
    CHECK(classical_multicurve_capacity(23) == 66);
    CHECK(prop31_holds(23, 13));
    for (int g = 0; g <= 60; ++g)
      for (int k = 1; k <= 40; ++k) {
        CHECK(prop31_holds(g, k));
        if (k * k - k > 6 * g + 6)
          for (int l : allowed_label_sizes(k, 3 * g + 3)) CHECK((l <= 1 || l >= k - 1));
      }
    for (int n = 26; n <= 60; ++n)
      for (int g = 0; g <= n - 3; ++g) CHECK((n / 2) * (n / 2 - 1) > 6 * g + 6);
    CHECK(label_classifier_consistent(13, classical_multicurve_capacity(23)));
  }

  TEST_CASE("component types") {
    CHECK(component_type(1, 5) == ComponentType::A);
    CHECK(component_type(4, 5) == ComponentType::I);
    CHECK(component_type(5, 5) == ComponentType::C);
    CHECK(component_type(2, 5) == ComponentType::other);
    CHECK(component_type(1, 2) == ComponentType::A);
  }

  TEST_CASE("labeled multicurve model") {
    const std::vector<int> sizes{1, 4};
    auto m = LabeledMulticurveModel::symmetric(5, sizes, 30);
    CHECK(m.components().size() == 10);
    CHECK(m.is_totally_symmetric());
    for (const auto& pi : all_permutations(5)) CHECK(m.relabeled(pi).label_multiset() == m.label_multiset());
    auto types = m.component_types();
    CHECK(std::count(types.begin(), types.end(), ComponentType::A) == 5);
    CHECK(std::count(types.begin(), types.end(), ComponentType::I) == 5);

    LabeledMulticurveModel lone(5, {0b00001}, 30);
    CHECK_FALSE(lone.is_totally_symmetric());
    const std::vector<int> pairs{2};
    CHECK_THROWS(LabeledMulticurveModel::symmetric(5, pairs, 9));
  }

  TEST_CASE("classify JSON") {
    auto j = tss_classify_json(13, multicurve_capacity(23), 23);
    CHECK(j["capacity"] == 72);
    CHECK(j["allowed"] == nlohmann::json::parse("[0,1,12,13]"));
    CHECK(j["prop31"] == true);
  }
}
