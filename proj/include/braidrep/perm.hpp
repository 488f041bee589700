#pragma once

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace braidrep {

/// A bijection of {1..m}. Points are stored 0-based; the 1-based view is only used
/// at the boundaries (cycle notation, JSON).
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() : images_{0} {}

  /// Images in 0-based form; throws std::invalid_argument unless a bijection of {0..m-1}.
  explicit Permutation(std::vector<Point> zero_based_images);

  static Permutation identity(std::size_t degree);
  static Permutation from_one_based(std::span<const Point> images);
  static Permutation from_one_based(std::initializer_list<Point> images);
  /// Cycles written 1-based, e.g. from_cycles(4, {{1, 2}, {3, 4}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  /// Image of the 0-based point i.
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  std::vector<Point> one_based() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Cycle lengths sorted in decreasing order; they sum to degree().
  std::vector<std::size_t> cycle_type() const;
  /// Least e > 0 with p^e = identity.
  std::uint64_t order() const;
  Permutation pow(long exponent) const;

  /// Disjoint cycle notation, fixed points omitted, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// (p * q)(i) = p(q(i)). Throws std::invalid_argument on a degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// h p h^-1.
Permutation conjugate(const Permutation& p, const Permutation& h);

bool commute(const Permutation& p, const Permutation& q);

std::vector<std::size_t> cycle_type(const Permutation& p);

/// Orbits of the group generated by gens on {0..degree-1}, each sorted, ordered by least point.
std::vector<std::vector<Permutation::Point>> orbits(std::span<const Permutation> gens,
                                                    std::size_t degree);

/// True iff the generated group has a single orbit on the points. With no generators
/// the orbits are singletons, so only degree 1 is transitive.
bool is_transitive(std::span<const Permutation> gens, std::size_t degree);
/// Degree taken from the generators; throws if gens is empty or degrees differ.
bool is_transitive(std::span<const Permutation> gens);

/// All partitions of m, each in decreasing order, listed in reverse lexicographic order.
std::vector<std::vector<std::size_t>> integer_partitions(std::size_t m);

/// The canonical permutation with the given cycle type: consecutive runs
/// (1 2 .. l1)(l1+1 .. l1+l2)... in 1-based notation.
Permutation canonical_of_cycle_type(std::size_t degree, std::span<const std::size_t> type);

/// Every element of the symmetric group of the given degree, in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t degree);

/// Order of the group generated by gens, by closure enumeration. Throws
/// ResourceLimitExceeded once more than `limit` elements have been found.
std::uint64_t generated_group_order(std::span<const Permutation> gens, std::size_t degree,
                                    std::size_t limit = 1'000'000);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

}  // namespace braidrep

template <>
struct std::hash<braidrep::Permutation> {
  std::size_t operator()(const braidrep::Permutation& p) const noexcept;
};
