#pragma once

// Totally symmetric sets in symmetric groups, the labeled multicurve counting model,
// and the label-size classifier.

#include "braidrep/perm.hpp"
#include "braidrep/scalar.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace braidrep {

inline constexpr std::size_t kMaxConjugatorScanDegree = 9;

struct TotalSymmetryResult {
  bool holds = false;
  /// witnesses[i] conjugates the ordered set onto itself with x_i and x_{i+1} swapped.
  std::vector<Permutation> witnesses;
  std::optional<std::pair<std::size_t, std::size_t>> non_commuting;
  std::optional<std::size_t> unrealized_transposition;
};

/// Pairwise commutation plus a conjugator in Sigma_m for each adjacent transposition
/// of the set, found by an exhaustive lexicographic scan of Sigma_m. Degree above 9
/// raises ResourceLimitExceeded.
TotalSymmetryResult is_totally_symmetric(std::span<const Permutation> elements);

enum class ImageVerdict { singleton, full_cardinality, violation };

std::string to_string(ImageVerdict v);

/// Image of a totally symmetric set of the given cardinality under a homomorphism:
/// either one element, or as many elements as the source forming a totally symmetric set.
ImageVerdict check_image_dichotomy(std::size_t source_cardinality, std::span<const Permutation> images);

struct OrderBoundResult {
  std::uint64_t group_order = 0;
  BigInt bound;  // 2^(k-1)
  bool holds = false;
};

/// |<X>| >= 2^(k-1), with |<X>| by closure enumeration (limit 10^6 elements).
OrderBoundResult min_order_bound_check(std::span<const Permutation> elements);

/// Exhaustive scan over totally symmetric sets of distinct elements in Sigma_m.
/// Sets are taken up to conjugation: each contains the canonical representative of its class.
struct TssScanReport {
  std::size_t degree = 0;
  std::size_t max_size = 0;
  std::vector<std::size_t> sets_by_size;  // index k
  std::vector<std::vector<Permutation>> violations;
};

TssScanReport scan_totally_symmetric_sets(std::size_t degree, std::size_t max_size);

/// { l in 0..k : C(k, l) <= capacity }.
std::vector<int> allowed_label_sizes(int k, const BigInt& capacity);

/// Disjoint-curve capacity used by the classifier by default: 3g + 3.
BigInt multicurve_capacity(int g);
/// Classical count of disjoint non-isotopic essential curves on a closed genus g >= 2 surface: 3g - 3.
BigInt classical_multicurve_capacity(int g);

/// When k^2 - k > 6g + 6, every allowed label size lies in {0, 1, k-1, k}.
/// Always true; a false return means the classifier is wrong.
bool prop31_holds(int g, int k);
/// Same statement against an arbitrary capacity: whenever C(k, 2) > capacity,
/// every allowed size is in {0, 1, k-1, k}.
bool label_classifier_consistent(int k, const BigInt& capacity);

enum class ComponentType { A, I, C, other };

std::string to_string(ComponentType t);
/// A for |label| = 1, I for k - 1, C for k. When k = 2 a singleton label is reported as A.
ComponentType component_type(std::size_t label_size, std::size_t k);

/// Abstract multicurve whose components carry nonempty label subsets of {1..k}
/// (bit i-1 set for label i).
class LabeledMulticurveModel {
 public:
  LabeledMulticurveModel(int k, std::vector<std::uint64_t> components, BigInt capacity);

  /// Every label subset of each listed size, once. Throws if the result exceeds capacity.
  static LabeledMulticurveModel symmetric(int k, std::span<const int> label_sizes, BigInt capacity);

  int k() const noexcept { return k_; }
  const std::vector<std::uint64_t>& components() const noexcept { return components_; }
  const BigInt& capacity() const noexcept { return capacity_; }

  /// Label multiset invariant under every permutation of {1..k}.
  bool is_totally_symmetric() const;
  /// Apply a permutation of {1..k} to every label.
  LabeledMulticurveModel relabeled(const Permutation& pi) const;
  std::vector<ComponentType> component_types() const;
  /// Label multiset in canonical (sorted) form.
  std::vector<std::uint64_t> label_multiset() const;

 private:
  int k_;
  std::vector<std::uint64_t> components_;
  BigInt capacity_;
};

nlohmann::json tss_classify_json(int k, const BigInt& capacity, int g);

}  // namespace braidrep
