#include "braidrep/perm.hpp"

#include "braidrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace braidrep {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q, const char* where) {
  if (p.degree() != q.degree()) {
    std::ostringstream msg;
    msg << where << ": incompatible degrees " << p.degree() << " and " << q.degree();
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> zero_based_images) : images_(std::move(zero_based_images)) {
  if (images_.empty()) throw std::invalid_argument("Permutation: degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const Point> images) {
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) throw std::invalid_argument("Permutation: 1-based image 0");
    zero[i] = images[i] - 1;
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::from_one_based(std::initializer_list<Point> images) {
  return from_one_based(std::span<const Point>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> copy;
  for (const auto& c : cycles) copy.emplace_back(c);
  return from_cycles(degree, copy);
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw std::invalid_argument("Permutation::from_cycles: point out of range");
      if (used[from - 1]) throw std::invalid_argument("Permutation::from_cycles: cycles are not disjoint");
      used[from - 1] = true;
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

std::vector<Permutation::Point> Permutation::one_based() const {
  std::vector<Point> out(images_);
  for (auto& x : out) ++x;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

Permutation Permutation::pow(long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1UL;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p[q[i]];
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& h) {
  require_same_degree(p, h, "conjugate");
  // (h p h^-1)(h(i)) = h(p(i))
  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[h[i]] = h[p[i]];
  return Permutation(std::move(images));
}

bool commute(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "commute");
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p[q[i]] != q[p[i]]) return false;
  return true;
}

std::vector<std::size_t> cycle_type(const Permutation& p) { return p.cycle_type(); }

std::vector<std::vector<Permutation::Point>> orbits(std::span<const Permutation> gens, std::size_t degree) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("orbits: generator degree mismatch");
  std::vector<long> label(degree, -1);
  std::vector<std::vector<Permutation::Point>> result;
  for (std::size_t start = 0; start < degree; ++start) {
    if (label[start] >= 0) continue;
    std::vector<Permutation::Point> orbit{static_cast<Permutation::Point>(start)};
    label[start] = static_cast<long>(result.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gens) {
        auto y = g[orbit[head]];
        if (label[y] < 0) {
          label[y] = static_cast<long>(result.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  return orbits(gens, degree).size() == 1;
}

bool is_transitive(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("is_transitive: empty generator set has no degree");
  return is_transitive(gens, gens.front().degree());
}

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, m, m);
  return out;
}

Permutation canonical_of_cycle_type(std::size_t degree, std::span<const std::size_t> type) {
  std::size_t total = std::accumulate(type.begin(), type.end(), std::size_t{0});
  if (total != degree) throw std::invalid_argument("canonical_of_cycle_type: parts do not sum to degree");
  std::vector<Permutation::Point> images(degree);
  std::size_t start = 0;
  for (std::size_t len : type) {
    for (std::size_t i = 0; i < len; ++i)
      images[start + i] = static_cast<Permutation::Point>(start + (i + 1) % len);
    start += len;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation::Point> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::uint64_t generated_group_order(std::span<const Permutation> gens, std::size_t degree, std::size_t limit) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generated_group_order: generator degree mismatch");
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier.front());
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(g, frontier[head]);
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw ResourceLimitExceeded("generated_group_order: closure exceeds " + std::to_string(limit) +
                                      " elements");
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

void to_json(nlohmann::json& j, const Permutation& p) { j = p.one_based(); }

void from_json(const nlohmann::json& j, Permutation& p) {
  auto images = j.get<std::vector<Permutation::Point>>();
  p = Permutation::from_one_based(std::span<const Permutation::Point>(images));
}

}  // namespace braidrep

std::size_t std::hash<braidrep::Permutation>::operator()(const braidrep::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}
