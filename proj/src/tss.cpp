#include "braidrep/tss.hpp"

#include "braidrep/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace braidrep {

namespace {

using Images = std::vector<Permutation::Point>;

// h x h^-1 == y, i.e. h(x(p)) == y(h(p)) for every point p.
bool conjugates_to(const Images& h, const Permutation& x, const Permutation& y) {
  for (std::size_t p = 0; p < h.size(); ++p)
    if (h[x[p]] != y[h[p]]) return false;
  return true;
}

std::optional<Permutation> find_swap_conjugator(std::span<const Permutation> xs, std::size_t i) {
  const std::size_t m = xs.front().degree();
  Images h(m);
  std::iota(h.begin(), h.end(), Permutation::Point{0});
  do {
    bool ok = conjugates_to(h, xs[i], xs[i + 1]) && conjugates_to(h, xs[i + 1], xs[i]);
    for (std::size_t j = 0; ok && j < xs.size(); ++j)
      if (j != i && j != i + 1) ok = conjugates_to(h, xs[j], xs[j]);
    if (ok) return Permutation(h);
  } while (std::next_permutation(h.begin(), h.end()));
  return std::nullopt;
}

void require_common_degree(std::span<const Permutation> xs, const char* where) {
  for (const auto& x : xs)
    if (x.degree() != xs.front().degree()) throw std::invalid_argument(std::string(where) + ": degrees differ");
}

}  // namespace

TotalSymmetryResult is_totally_symmetric(std::span<const Permutation> elements) {
  TotalSymmetryResult result;
  if (elements.empty()) {
    result.holds = true;
    return result;
  }
  require_common_degree(elements, "is_totally_symmetric");
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (!commute(elements[i], elements[j])) {
        result.non_commuting = std::make_pair(i, j);
        return result;
      }
  if (elements.size() == 1) {
    result.holds = true;
    return result;
  }
  if (elements.front().degree() > kMaxConjugatorScanDegree)
    throw ResourceLimitExceeded("is_totally_symmetric: degree " + std::to_string(elements.front().degree()) +
                                " is above the exhaustive scan bound of 9");
  // Adjacent transpositions generate Sigma_k, so their witnesses cover every permutation.
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    auto h = find_swap_conjugator(elements, i);
    if (!h) {
      result.unrealized_transposition = i;
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back(std::move(*h));
  }
  result.holds = true;
  return result;
}

std::string to_string(ImageVerdict v) {
  switch (v) {
    case ImageVerdict::singleton:
      return "singleton";
    case ImageVerdict::full_cardinality:
      return "full-cardinality";
    case ImageVerdict::violation:
      return "violation";
  }
  return "violation";
}

ImageVerdict check_image_dichotomy(std::size_t source_cardinality, std::span<const Permutation> images) {
  if (images.size() != source_cardinality)
    throw std::invalid_argument("check_image_dichotomy: one image per source element expected");
  if (images.empty()) return ImageVerdict::singleton;
  require_common_degree(images, "check_image_dichotomy");
  if (std::all_of(images.begin(), images.end(), [&](const Permutation& p) { return p == images.front(); }))
    return ImageVerdict::singleton;
  std::vector<Permutation> sorted(images.begin(), images.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return ImageVerdict::violation;
  return is_totally_symmetric(images).holds ? ImageVerdict::full_cardinality : ImageVerdict::violation;
}

OrderBoundResult min_order_bound_check(std::span<const Permutation> elements) {
  if (elements.empty()) throw std::invalid_argument("min_order_bound_check: empty set");
  require_common_degree(elements, "min_order_bound_check");
  OrderBoundResult out;
  out.group_order = generated_group_order(elements, elements.front().degree(), 1'000'000);
  out.bound = power(BigInt(2), elements.size() - 1);
  out.holds = BigInt(out.group_order) >= out.bound;
  return out;
}

TssScanReport scan_totally_symmetric_sets(std::size_t degree, std::size_t max_size) {
  if (degree < 1 || degree > kMaxConjugatorScanDegree)
    throw ResourceLimitExceeded("scan_totally_symmetric_sets: degree must be in 1..9");
  TssScanReport report;
  report.degree = degree;
  report.max_size = max_size;
  report.sets_by_size.assign(max_size + 1, 0);

  std::map<std::vector<std::size_t>, std::vector<Permutation>> classes;
  for (auto& p : all_permutations(degree)) classes[p.cycle_type()].push_back(std::move(p));

  for (const auto& [type, members] : classes) {
    Permutation rep = canonical_of_cycle_type(degree, type);
    std::vector<Permutation> partners;
    for (const auto& p : members)
      if (p != rep && commute(rep, p)) partners.push_back(p);

    std::vector<Permutation> chosen{rep};
    auto visit = [&](const std::vector<Permutation>& set) {
      auto symmetric = is_totally_symmetric(set);
      if (!symmetric.holds) return;
      ++report.sets_by_size[set.size()];
      if (!min_order_bound_check(set).holds) report.violations.push_back(set);
    };
    auto recurse = [&](auto&& self, std::size_t start) -> void {
      visit(chosen);
      if (chosen.size() == max_size) return;
      for (std::size_t i = start; i < partners.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 1; j < chosen.size() && ok; ++j) ok = commute(chosen[j], partners[i]);
        if (!ok) continue;
        chosen.push_back(partners[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    if (max_size >= 1) recurse(recurse, 0);
  }
  return report;
}

std::vector<int> allowed_label_sizes(int k, const BigInt& capacity) {
  if (k < 1) throw std::invalid_argument("allowed_label_sizes: need k >= 1");
  if (capacity < 0) throw std::invalid_argument("allowed_label_sizes: need capacity >= 0");
  std::vector<int> out;
  for (int l = 0; l <= k; ++l)
    if (binomial(k, l) <= capacity) out.push_back(l);
  return out;
}

BigInt multicurve_capacity(int g) {
  if (g < 0) throw std::invalid_argument("multicurve_capacity: need g >= 0");
  return BigInt(3) * g + 3;
}

BigInt classical_multicurve_capacity(int g) {
  if (g < 2) throw std::invalid_argument("classical_multicurve_capacity: need g >= 2");
  return BigInt(3) * g - 3;
}

bool label_classifier_consistent(int k, const BigInt& capacity) {
  if (binomial(k, 2) <= capacity) return true;
  for (int l : allowed_label_sizes(k, capacity))
    if (l != 0 && l != 1 && l != k - 1 && l != k) return false;
  return true;
}

bool prop31_holds(int g, int k) {
  if (g < 0 || k < 1) throw std::invalid_argument("prop31_holds: need g >= 0 and k >= 1");
  BigInt lhs = BigInt(k) * k - k;
  BigInt rhs = BigInt(6) * g + 6;
  if (!(lhs > rhs)) return true;
  for (int l : allowed_label_sizes(k, multicurve_capacity(g)))
    if (l != 0 && l != 1 && l != k - 1 && l != k) return false;
  return true;
}

std::string to_string(ComponentType t) {
  switch (t) {
    case ComponentType::A:
      return "A";
    case ComponentType::I:
      return "I";
    case ComponentType::C:
      return "C";
    case ComponentType::other:
      return "other";
  }
  return "other";
}

ComponentType component_type(std::size_t label_size, std::size_t k) {
  if (label_size == k) return ComponentType::C;
  if (label_size == 1) return ComponentType::A;
  if (label_size + 1 == k) return ComponentType::I;
  return ComponentType::other;
}

LabeledMulticurveModel::LabeledMulticurveModel(int k, std::vector<std::uint64_t> components, BigInt capacity)
    : k_(k), components_(std::move(components)), capacity_(std::move(capacity)) {
  if (k_ < 1 || k_ > 63) throw std::invalid_argument("LabeledMulticurveModel: k must be in 1..63");
  const std::uint64_t full = (std::uint64_t{1} << k_) - 1;
  for (auto label : components_)
    if (label == 0 || (label & ~full) != 0)
      throw std::invalid_argument("LabeledMulticurveModel: labels must be nonempty subsets of {1..k}");
  if (BigInt(components_.size()) > capacity_)
    throw std::invalid_argument("LabeledMulticurveModel: more components than the disjointness capacity");
}

LabeledMulticurveModel LabeledMulticurveModel::symmetric(int k, std::span<const int> label_sizes, BigInt capacity) {
  if (k < 1 || k > 63) throw std::invalid_argument("LabeledMulticurveModel::symmetric: k must be in 1..63");
  BigInt total = 0;
  for (int l : label_sizes) {
    if (l < 1 || l > k) throw std::invalid_argument("LabeledMulticurveModel::symmetric: label size out of range");
    total += binomial(k, l);
  }
  if (total > capacity)
    throw std::invalid_argument("LabeledMulticurveModel::symmetric: needs more components than the capacity");
  std::vector<std::uint64_t> components;
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (int l : label_sizes) {
    std::uint64_t subset = (std::uint64_t{1} << l) - 1;
    while (subset < limit) {
      components.push_back(subset);
      std::uint64_t low = subset & (~subset + 1);
      std::uint64_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return LabeledMulticurveModel(k, std::move(components), std::move(capacity));
}

std::vector<std::uint64_t> LabeledMulticurveModel::label_multiset() const {
  std::vector<std::uint64_t> out = components_;
  std::sort(out.begin(), out.end());
  return out;
}

bool LabeledMulticurveModel::is_totally_symmetric() const {
  // Invariance under Sigma_k means the multiplicity of a label depends only on its size,
  // so every subset of a size that occurs must occur, all equally often.
  std::map<std::uint64_t, std::size_t> multiplicity;
  for (auto label : components_) ++multiplicity[label];
  std::map<int, std::pair<std::size_t, std::size_t>> by_size;  // size -> (distinct labels, multiplicity)
  for (const auto& [label, count] : multiplicity) {
    int size = std::popcount(label);
    auto [it, inserted] = by_size.try_emplace(size, 0, count);
    if (!inserted && it->second.second != count) return false;
    ++it->second.first;
  }
  for (const auto& [size, entry] : by_size)
    if (BigInt(entry.first) != binomial(k_, size)) return false;
  return true;
}

LabeledMulticurveModel LabeledMulticurveModel::relabeled(const Permutation& pi) const {
  if (static_cast<int>(pi.degree()) != k_) throw std::invalid_argument("relabeled: permutation degree must be k");
  std::vector<std::uint64_t> out;
  out.reserve(components_.size());
  for (auto label : components_) {
    std::uint64_t image = 0;
    for (int i = 0; i < k_; ++i)
      if (label & (std::uint64_t{1} << i)) image |= std::uint64_t{1} << pi[static_cast<std::size_t>(i)];
    out.push_back(image);
  }
  return LabeledMulticurveModel(k_, std::move(out), capacity_);
}

std::vector<ComponentType> LabeledMulticurveModel::component_types() const {
  std::vector<ComponentType> out;
  for (auto label : components_)
    out.push_back(component_type(static_cast<std::size_t>(std::popcount(label)), static_cast<std::size_t>(k_)));
  return out;
}

nlohmann::json tss_classify_json(int k, const BigInt& capacity, int g) {
  return {{"k", k},
          {"g", g},
          {"capacity", bigint_json(capacity)},
          {"allowed", allowed_label_sizes(k, capacity)},
          {"classifier_consistent", label_classifier_consistent(k, capacity)},
          {"prop31", prop31_holds(g, k)}};
}

}  // namespace braidrep
