#include "braidrep/homsearch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace braidrep {

namespace {

constexpr int kPackedCapacity = 16;

// Search-local permutation: images of 0..m-1 followed by the identity tail, so whole-array
// comparison agrees with comparison of the first m entries.
using Packed = std::array<std::uint8_t, kPackedCapacity>;

struct PackedHash {
  std::size_t operator()(const std::vector<Packed>& tuple) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& p : tuple)
      for (auto x : p) {
        h ^= x;
        h *= 1099511628211ULL;
      }
    return h;
  }
};

Packed pack(const Permutation& p) {
  Packed out{};
  for (int i = 0; i < kPackedCapacity; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) out[i] = static_cast<std::uint8_t>(p[i]);
  return out;
}

Permutation unpack(const Packed& p, int m) {
  std::vector<Permutation::Point> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
  return Permutation(std::move(images));
}

bool braids(const Packed& a, const Packed& b, int m) {
  for (int x = 0; x < m; ++x)
    if (a[b[a[x]]] != b[a[b[x]]]) return false;
  return true;
}

bool commutes(const Packed& a, const Packed& b, int m) {
  for (int x = 0; x < m; ++x)
    if (a[b[x]] != b[a[x]]) return false;
  return true;
}

Packed conjugate_packed(const Packed& p, const Packed& h, int m) {
  Packed out = p;
  for (int i = 0; i < m; ++i) out[h[i]] = h[p[i]];
  return out;
}

// Per cycle type of s_1: the fixed representative, its braiding partners (candidates
// for s_2), and its commuting class members (candidates for s_3, s_4, ...).
struct TypeData {
  Packed rep{};
  std::vector<Packed> braiding;
  std::vector<Packed> commuting;
};

struct WorkItem {
  std::size_t type = 0;
  Packed second{};
};

class Search {
 public:
  Search(int n, int m, const SearchOptions& options) : n_(n), m_(m), options_(options) {
    start_ = std::chrono::steady_clock::now();
  }

  Enumeration run() {
    build_types();
    for (std::size_t t = 0; t < types_.size(); ++t)
      for (const auto& c : types_[t].braiding) items_.push_back({t, c});
    results_.assign(items_.size(), {});
    done_.assign(items_.size(), 0);

    unsigned workers = std::max(1U, options_.workers);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, items_.size())));
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this] { work(); });
      for (auto& t : pool) t.join();
    }

    Enumeration out;
    out.n = n_;
    out.m = m_;
    out.nodes = nodes_.load();
    out.orbits = quotient();
    if (aborted_.load()) {
      std::size_t finished = static_cast<std::size_t>(std::count(done_.begin(), done_.end(), 1));
      double fraction = items_.empty() ? 1.0 : static_cast<double>(finished) / static_cast<double>(items_.size());
      throw BudgetExceeded(fraction, std::move(out));
    }
    return out;
  }

 private:
  void build_types() {
    std::map<std::vector<std::size_t>, std::vector<Packed>> by_type;
    for (const auto& p : all_permutations(static_cast<std::size_t>(m_))) {
      all_.push_back(pack(p));
      by_type[p.cycle_type()].push_back(all_.back());
    }

    for (const auto& partition : integer_partitions(static_cast<std::size_t>(m_))) {
      TypeData data;
      data.rep = pack(canonical_of_cycle_type(static_cast<std::size_t>(m_), partition));
      for (const auto& c : by_type[partition]) {
        if (braids(data.rep, c, m_)) data.braiding.push_back(c);
        if (commutes(data.rep, c, m_)) data.commuting.push_back(c);
      }
      types_.push_back(std::move(data));
    }
  }

  bool tick() {
    std::uint64_t count = ++nodes_;
    if (options_.budget.max_nodes && count > *options_.budget.max_nodes) aborted_ = true;
    if (options_.budget.wall_time && (count & 0xFFFU) == 0) {
      if (std::chrono::steady_clock::now() - start_ > *options_.budget.wall_time) aborted_ = true;
    }
    return !aborted_.load(std::memory_order_relaxed);
  }

  void work() {
    for (;;) {
      std::size_t idx = next_.fetch_add(1);
      if (idx >= items_.size() || aborted_.load()) return;
      const WorkItem& item = items_[idx];
      const TypeData& type = types_[item.type];
      std::vector<Packed> tuple{type.rep, item.second};
      std::vector<std::vector<Packed>> found;
      if (!tick()) return;
      extend(type, tuple, found);
      if (aborted_.load()) return;
      results_[idx] = std::move(found);
      done_[idx] = 1;
    }
  }

  void extend(const TypeData& type, std::vector<Packed>& tuple, std::vector<std::vector<Packed>>& found) {
    if (static_cast<int>(tuple.size()) == n_ - 1) {
      found.push_back(tuple);
      return;
    }
    const std::size_t next = tuple.size();  // 0-based index of the generator being chosen
    for (const auto& c : type.commuting) {
      if (!braids(tuple[next - 1], c, m_)) continue;
      bool ok = true;
      for (std::size_t j = 1; j + 1 < next && ok; ++j) ok = commutes(tuple[j], c, m_);
      if (!ok) continue;
      if (!tick()) return;
      tuple.push_back(c);
      extend(type, tuple, found);
      tuple.pop_back();
      if (aborted_.load(std::memory_order_relaxed)) return;
    }
  }

  // Solutions with a fixed s_1 are closed under conjugation by its centralizer; keep the
  // lexicographically least member of each orbit.
  std::vector<SymHomomorphism> quotient() {
    std::map<std::size_t, std::vector<std::vector<Packed>>> per_type;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (!done_[i]) continue;
      auto& bucket = per_type[items_[i].type];
      bucket.insert(bucket.end(), results_[i].begin(), results_[i].end());
    }

    std::vector<SymHomomorphism> orbits;
    for (auto& [t, raw] : per_type) {
      if (raw.empty()) continue;
      std::sort(raw.begin(), raw.end());
      const Packed& rep = types_[t].rep;
      std::vector<Packed> centralizer;
      for (const auto& h : all_)
        if (commutes(rep, h, m_)) centralizer.push_back(h);

      std::unordered_set<std::vector<Packed>, PackedHash> remaining(raw.begin(), raw.end());
      for (const auto& tuple : raw) {
        if (!remaining.count(tuple)) continue;
        std::vector<Packed> least = tuple;
        std::vector<Packed> image(tuple.size());
        for (const auto& h : centralizer) {
          for (std::size_t j = 0; j < tuple.size(); ++j) image[j] = conjugate_packed(tuple[j], h, m_);
          remaining.erase(image);
          if (image < least) least = image;
        }
        SymHomomorphism hom;
        hom.n = n_;
        hom.m = m_;
        for (const auto& p : least) hom.gen_images.push_back(unpack(p, m_));
        orbits.push_back(std::move(hom));
      }
    }

    if (options_.transitive_only) {
      std::erase_if(orbits, [&](const SymHomomorphism& h) {
        return !is_transitive(h.gen_images, static_cast<std::size_t>(m_));
      });
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
  }

  int n_;
  int m_;
  SearchOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Packed> all_;
  std::vector<TypeData> types_;
  std::vector<WorkItem> items_;
  std::vector<std::vector<std::vector<Packed>>> results_;
  std::vector<char> done_;
  std::atomic<std::size_t> next_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

std::vector<std::size_t> support(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p[i] != i) out.push_back(i);
  return out;
}

bool is_standard(const SymHomomorphism& h) {
  if (h.m != h.n || h.gen_images.size() < 2) return false;
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& s : h.gen_images) {
    auto sup = support(s);
    if (sup.size() != 2) return false;
    supports.push_back(std::move(sup));
  }
  auto contains = [](const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  // Recover the relabeling a_1, ..., a_n with s_i = (a_i a_{i+1}).
  std::vector<std::size_t> path;
  const auto& first = supports[0];
  const auto& second = supports[1];
  bool first_shared = contains(second, first[0]);
  bool second_shared = contains(second, first[1]);
  if (first_shared == second_shared) return false;
  path.push_back(first_shared ? first[1] : first[0]);
  path.push_back(first_shared ? first[0] : first[1]);
  for (std::size_t i = 1; i < supports.size(); ++i) {
    const auto& sup = supports[i];
    std::size_t last = path.back();
    if (!contains(sup, last)) return false;
    std::size_t other = sup[0] == last ? sup[1] : sup[0];
    if (std::find(path.begin(), path.end(), other) != path.end()) return false;
    path.push_back(other);
  }
  return static_cast<int>(path.size()) == h.n;
}

void check_range(int n, int m, const SearchBudget& budget) {
  if (n < 3) throw std::invalid_argument("enumerate_homs: need n >= 3");
  if (m < 1) throw std::invalid_argument("enumerate_homs: need m >= 1");
  if (m > kPackedCapacity) throw std::invalid_argument("enumerate_homs: m above 16 is not supported");
  if ((n > 8 || m > 10) && !budget.allow_large)
    throw std::invalid_argument("enumerate_homs: (n, m) beyond n <= 8, m <= 10 requires an explicit override");
}

}  // namespace

Permutation SymHomomorphism::evaluate(const BraidWord& word) const {
  if (word.strands() != n) throw std::invalid_argument("SymHomomorphism::evaluate: strand count differs");
  Permutation result = Permutation::identity(static_cast<std::size_t>(m));
  for (int letter : word.letters()) {
    const Permutation& s = image(std::abs(letter));
    result = compose(result, letter > 0 ? s : s.inverse());
  }
  return result;
}

bool SymHomomorphism::satisfies_relations() const {
  if (static_cast<int>(gen_images.size()) != n - 1) return false;
  for (const auto& s : gen_images)
    if (static_cast<int>(s.degree()) != m) return false;
  for (std::size_t i = 0; i < gen_images.size(); ++i) {
    if (gen_images[i].cycle_type() != gen_images[0].cycle_type()) return false;
    for (std::size_t j = i + 1; j < gen_images.size(); ++j) {
      const auto& a = gen_images[i];
      const auto& b = gen_images[j];
      if (j == i + 1) {
        if (compose(compose(a, b), a) != compose(compose(b, a), b)) return false;
      } else if (compose(a, b) != compose(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(HomKind kind) {
  switch (kind) {
    case HomKind::cyclic:
      return "cyclic";
    case HomKind::standard:
      return "standard";
    case HomKind::other:
      return "other";
  }
  return "other";
}

HomClassification classify(const SymHomomorphism& h) {
  HomClassification out;
  out.transitive = is_transitive(h.gen_images, static_cast<std::size_t>(h.m));
  bool all_equal = std::all_of(h.gen_images.begin(), h.gen_images.end(),
                               [&](const Permutation& s) { return s == h.gen_images.front(); });
  if (all_equal)
    out.kind = HomKind::cyclic;
  else if (is_standard(h))
    out.kind = HomKind::standard;
  else
    out.kind = HomKind::other;
  return out;
}

BudgetExceeded::BudgetExceeded(double completed_fraction, Enumeration partial)
    : std::runtime_error("search budget exhausted"),
      completed_fraction_(completed_fraction),
      partial_(std::move(partial)) {}

Enumeration enumerate_homs(int n, int m, const SearchOptions& options) {
  check_range(n, m, options.budget);
  return Search(n, m, options).run();
}

RigidityReport verify_lin_a(int n, int m, const SearchOptions& options) {
  if (!(6 < n && n < m && m < 2 * n))
    throw std::invalid_argument("verify_lin_a: requires 6 < n < m < 2n");
  SearchOptions opts = options;
  opts.transitive_only = true;
  Enumeration e = enumerate_homs(n, m, opts);
  RigidityReport report;
  report.statement = "every transitive homomorphism is cyclic";
  report.n = n;
  report.degrees = {m};
  for (const auto& h : e.orbits) {
    auto c = classify(h);
    ++report.orbits_checked;
    if (c.transitive) ++report.transitive_orbits;
    if (c.kind != HomKind::cyclic) report.counterexamples.push_back(h);
  }
  report.holds = report.counterexamples.empty();
  return report;
}

RigidityReport verify_artin(int n, const SearchOptions& options) {
  if (n < 5) throw std::invalid_argument("verify_artin: requires n >= 5");
  SearchOptions opts = options;
  opts.transitive_only = true;
  Enumeration e = enumerate_homs(n, n, opts);
  RigidityReport report;
  report.statement = "every transitive homomorphism into the symmetric group of degree n is cyclic or standard";
  report.n = n;
  report.degrees = {n};
  for (const auto& h : e.orbits) {
    auto c = classify(h);
    ++report.orbits_checked;
    if (c.transitive) ++report.transitive_orbits;
    if (c.kind == HomKind::other) report.counterexamples.push_back(h);
  }
  report.holds = report.counterexamples.empty();
  return report;
}

RigidityReport verify_lin_f(int n, const SearchOptions& options) {
  if (n < 5) throw std::invalid_argument("verify_lin_f: requires n >= 5");
  RigidityReport report;
  report.statement = "every homomorphism into a symmetric group of degree below n is cyclic";
  report.n = n;
  SearchOptions opts = options;
  opts.transitive_only = false;
  for (int m = 1; m < n; ++m) {
    report.degrees.push_back(m);
    Enumeration e = enumerate_homs(n, m, opts);
    for (const auto& h : e.orbits) {
      auto c = classify(h);
      ++report.orbits_checked;
      if (c.transitive) ++report.transitive_orbits;
      if (c.kind != HomKind::cyclic) report.counterexamples.push_back(h);
    }
  }
  report.holds = report.counterexamples.empty();
  return report;
}

namespace {

nlohmann::json orbit_json(const SymHomomorphism& h) {
  auto c = classify(h);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : h.gen_images) gens.push_back(s);
  return {{"gens", gens}, {"kind", to_string(c.kind)}, {"transitive", c.transitive}};
}

}  // namespace

nlohmann::json to_json(const Enumeration& e, bool complete) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& h : e.orbits) orbits.push_back(orbit_json(h));
  return {{"n", e.n}, {"m", e.m}, {"orbits", orbits}, {"complete", complete}};
}

nlohmann::json to_json(const RigidityReport& r) {
  nlohmann::json counter = nlohmann::json::array();
  for (const auto& h : r.counterexamples) counter.push_back(orbit_json(h));
  return {{"statement", r.statement},
          {"n", r.n},
          {"m", r.degrees},
          {"holds", r.holds},
          {"orbits_checked", r.orbits_checked},
          {"transitive_orbits", r.transitive_orbits},
          {"counterexamples", counter}};
}

}  // namespace braidrep
