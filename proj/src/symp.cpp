#include "braidrep/symp.hpp"

#include "braidrep/errors.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace braidrep {

namespace {

void require_genus(int g, const char* where) {
  if (g < 1) throw std::invalid_argument(std::string(where) + ": genus must be positive");
}

void require_length(const IntVector& v, int g, const char* where) {
  if (v.size() != 2 * g)
    throw std::invalid_argument(std::string(where) + ": vector length " + std::to_string(v.size()) +
                                " but genus " + std::to_string(g) + " needs " + std::to_string(2 * g));
}

IntVector zero_vector(int g) {
  IntVector v(2 * g);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = 0;
  return v;
}

// J v, with J = [[0, I], [-I, 0]].
IntVector apply_form(const IntVector& v) {
  const Eigen::Index g = v.size() / 2;
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < g; ++i) {
    out(i) = v(g + i);
    out(g + i) = -v(i);
  }
  return out;
}

BigInt gcd_of_entries(const IntVector& v) {
  BigInt out = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) out = boost::multiprecision::gcd(out, v(i));
  return boost::multiprecision::abs(out);
}

int reduce_mod(const BigInt& x, int p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

}  // namespace

IntMatrix symplectic_form(int g) {
  IntMatrix j = zero_matrix<BigInt>(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

BigInt symplectic_pairing(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("symplectic_pairing: vectors must share an even length");
  IntVector jy = apply_form(y);
  BigInt out = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) out += x(i) * jy(i);
  return out;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const IntMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
  return exactly_equal(multiply<BigInt>(multiply<BigInt>(m.transpose(), j), m), j);
}

IntegerSymplecticMatrix::IntegerSymplecticMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0 || entries_.rows() == 0)
    throw std::invalid_argument("IntegerSymplecticMatrix: need a nonempty 2g x 2g matrix");
  if (!is_symplectic(entries_)) throw std::invalid_argument("IntegerSymplecticMatrix: M^T J M != J");
  if (determinant(entries_) != 1) throw std::invalid_argument("IntegerSymplecticMatrix: determinant is not 1");
}

IntegerSymplecticMatrix IntegerSymplecticMatrix::identity(int g) {
  require_genus(g, "IntegerSymplecticMatrix::identity");
  return IntegerSymplecticMatrix(identity_matrix<BigInt>(2 * g), Trusted{});
}

IntegerSymplecticMatrix IntegerSymplecticMatrix::minus_identity(int g) {
  require_genus(g, "IntegerSymplecticMatrix::minus_identity");
  IntMatrix m = identity_matrix<BigInt>(2 * g);
  for (int i = 0; i < 2 * g; ++i) m(i, i) = -1;
  return IntegerSymplecticMatrix(std::move(m), Trusted{});
}

IntegerSymplecticMatrix IntegerSymplecticMatrix::inverse() const {
  const IntMatrix j = symplectic_form(genus());
  IntMatrix inv = multiply<BigInt>(multiply<BigInt>(j, entries_.transpose()), j);
  for (Eigen::Index r = 0; r < inv.rows(); ++r)
    for (Eigen::Index c = 0; c < inv.cols(); ++c) inv(r, c) = -inv(r, c);
  return IntegerSymplecticMatrix(std::move(inv), Trusted{});
}

IntegerSymplecticMatrix IntegerSymplecticMatrix::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return IntegerSymplecticMatrix(matrix_power(entries_, static_cast<unsigned long>(exponent)), Trusted{});
}

IntegerSymplecticMatrix operator*(const IntegerSymplecticMatrix& a, const IntegerSymplecticMatrix& b) {
  if (a.genus() != b.genus()) throw std::invalid_argument("IntegerSymplecticMatrix: genera differ");
  return IntegerSymplecticMatrix(multiply(a.entries_, b.entries_), IntegerSymplecticMatrix::Trusted{});
}

IntegerSymplecticMatrix transvection_matrix(const IntVector& v, int sign, int g) {
  require_genus(g, "transvection_matrix");
  require_length(v, g, "transvection_matrix");
  if (sign != 1 && sign != -1) throw std::invalid_argument("transvection_matrix: sign must be +1 or -1");
  const IntVector w = apply_form(v);
  IntMatrix m = identity_matrix<BigInt>(2 * g);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) += sign * v(r) * w(c);
  return IntegerSymplecticMatrix(std::move(m));
}

IntVector basis_a(int g, int i) {
  if (i < 1 || i > g) throw std::invalid_argument("basis_a: index out of range");
  IntVector v = zero_vector(g);
  v(i - 1) = 1;
  return v;
}

IntVector basis_b(int g, int i) {
  if (i < 1 || i > g) throw std::invalid_argument("basis_b: index out of range");
  IntVector v = zero_vector(g);
  v(g + i - 1) = 1;
  return v;
}

ChainVectors chain_vectors(int g, int length) {
  require_genus(g, "chain_vectors");
  if (length < 0) throw std::invalid_argument("chain_vectors: negative length");
  if (length > 2 * g + 1)
    throw std::invalid_argument("chain_vectors: a chain on genus " + std::to_string(g) + " has at most " +
                                std::to_string(2 * g + 1) + " curves");
  ChainVectors out{g, {}};
  for (int idx = 1; idx <= length; ++idx) {
    if (idx == 1) {
      out.vectors.push_back(basis_a(g, 1));
    } else if (idx % 2 == 0) {
      out.vectors.push_back(basis_b(g, idx / 2));
    } else {
      int i = (idx - 1) / 2;
      out.vectors.push_back(i < g ? IntVector(basis_a(g, i) + basis_a(g, i + 1)) : basis_a(g, g));
    }
  }
  return out;
}

bool has_chain_pattern(const ChainVectors& chain) {
  const auto& vs = chain.vectors;
  for (const auto& v : vs)
    if (v.size() != 2 * chain.g || gcd_of_entries(v) != 1) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      BigInt p = symplectic_pairing(vs[i], vs[j]);
      if (j == i + 1 ? (p != 1 && p != -1) : p != 0) return false;
    }
  return true;
}

IntVector embed_vector(const IntVector& v, int g) {
  const Eigen::Index h = v.size() / 2;
  if (v.size() % 2 != 0 || h > g) throw std::invalid_argument("embed_vector: target genus too small");
  IntVector out = zero_vector(g);
  for (Eigen::Index i = 0; i < h; ++i) {
    out(i) = v(i);
    out(g + i) = v(h + i);
  }
  return out;
}

IntegerSymplecticMatrix HomologyRepresentation::evaluate(const BraidWord& word) const {
  if (word.strands() != n) throw std::invalid_argument("HomologyRepresentation::evaluate: strand count differs");
  IntegerSymplecticMatrix out = IntegerSymplecticMatrix::identity(g);
  for (int letter : word.letters()) {
    const auto& m = gen_images.at(static_cast<std::size_t>(std::abs(letter) - 1));
    out = out * (letter > 0 ? m : m.inverse());
  }
  return out;
}

bool HomologyRepresentation::satisfies_relations() const {
  for (std::size_t i = 0; i < gen_images.size(); ++i)
    for (std::size_t j = i + 1; j < gen_images.size(); ++j) {
      const auto& x = gen_images[i];
      const auto& y = gen_images[j];
      if (j == i + 1 ? !(x * y * x == y * x * y) : !(x * y == y * x)) return false;
    }
  return true;
}

HomologyRepresentation standard_rep(int n, int sign) { return standard_rep(n, sign, (n - 1) / 2); }

HomologyRepresentation standard_rep(int n, int sign, int g) {
  if (n < 3) throw std::invalid_argument("standard_rep: need n >= 3");
  const int base = (n - 1) / 2;
  if (g < base) throw std::invalid_argument("standard_rep: genus below floor((n-1)/2)");
  HomologyRepresentation r{n, g, {}};
  for (const auto& v : chain_vectors(base, n - 1).vectors)
    r.gen_images.push_back(transvection_matrix(embed_vector(v, g), sign, g));
  return r;
}

HomologyRepresentation transvect_representation(const HomologyRepresentation& r, const IntegerSymplecticMatrix& phi) {
  if (phi.genus() != r.g) throw std::invalid_argument("transvect_representation: genus differs");
  for (std::size_t i = 0; i < r.gen_images.size(); ++i)
    if (!(phi * r.gen_images[i] == r.gen_images[i] * phi))
      throw std::invalid_argument("transvect_representation: phi does not commute with the image of sigma_" +
                                  std::to_string(i + 1));
  HomologyRepresentation out{r.n, r.g, {}};
  for (const auto& m : r.gen_images) out.gen_images.push_back(phi * m);
  if (!out.satisfies_relations()) throw std::logic_error("transvect_representation: relations lost");
  return out;
}

IntegerSymplecticMatrix random_symplectic(int h, int factors, std::mt19937_64& rng) {
  require_genus(h, "random_symplectic");
  std::uniform_int_distribution<int> handle(1, h);
  std::uniform_int_distribution<int> shape(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  IntegerSymplecticMatrix out = IntegerSymplecticMatrix::identity(h);
  for (int f = 0; f < factors; ++f) {
    int i = handle(rng);
    int j = handle(rng);
    IntVector v;
    switch (shape(rng)) {
      case 0:
        v = basis_a(h, i);
        break;
      case 1:
        v = basis_b(h, i);
        break;
      case 2:
        v = basis_a(h, i) + basis_b(h, j);
        break;
      default:
        v = i == j ? IntVector(basis_a(h, i) + basis_b(h, i)) : IntVector(basis_a(h, i) + basis_a(h, j));
        break;
    }
    out = out * transvection_matrix(v, coin(rng) ? 1 : -1, h);
  }
  return out;
}

IntegerSymplecticMatrix random_commuting_element(int n, int g, std::mt19937_64& rng) {
  const int base = (n - 1) / 2;
  if (n < 3 || g <= base) throw std::invalid_argument("random_commuting_element: need genus above floor((n-1)/2)");
  const int h = g - base;
  std::uniform_int_distribution<int> coin(0, 1);
  const int eps = coin(rng) ? 1 : -1;
  IntegerSymplecticMatrix block = random_symplectic(h, 6, rng);
  IntMatrix m = zero_matrix<BigInt>(2 * g, 2 * g);
  for (int i = 0; i < base; ++i) {
    m(i, i) = eps;
    m(g + i, g + i) = eps;
  }
  auto global = [&](int local) { return local < h ? base + local : g + base + (local - h); };
  for (int r = 0; r < 2 * h; ++r)
    for (int c = 0; c < 2 * h; ++c) m(global(r), global(c)) = block(r, c);
  return IntegerSymplecticMatrix(std::move(m));
}

std::vector<int> braid_power_test(int g, int kmax) {
  require_genus(g, "braid_power_test");
  if (kmax < 1) throw std::invalid_argument("braid_power_test: need kmax >= 1");
  const auto a = transvection_matrix(basis_a(g, 1), 1, g);
  const auto b = transvection_matrix(basis_b(g, 1), 1, g);
  std::vector<int> out;
  for (int k = -kmax; k <= kmax; ++k) {
    const auto ak = a.pow(k);
    const auto bk = b.pow(k);
    if (ak * bk * ak == bk * ak * bk) out.push_back(k);
  }
  return out;
}

bool verify_lantern(const LanternConfiguration& config) {
  const int g = config.g;
  auto twist = [&](const IntVector& v, int sign) { return transvection_matrix(v, sign, g); };
  IntegerSymplecticMatrix rhs = IntegerSymplecticMatrix::identity(g);
  for (int i = 0; i < 3; ++i) rhs = rhs * twist(config.a[i], 1) * twist(config.b[i], -1);
  return twist(config.c, 1) == rhs;
}

LanternConfiguration genus3_lantern() {
  // Boundary classes d_1..d_4 of a four-holed sphere cutting S_3 into itself and a
  // genus-one piece with four holes; interior curves enclose d_1 d_2, d_2 d_3, d_1 d_3.
  const int g = 3;
  const IntVector d1 = basis_a(g, 1);
  const IntVector d2 = basis_a(g, 2);
  const IntVector d3 = basis_a(g, 3);
  const IntVector d4 = -(d1 + d2 + d3);
  return LanternConfiguration{g, d1, {IntVector(d1 + d2), IntVector(d2 + d3), IntVector(d1 + d3)}, {d2, d3, d4}};
}

ChainRelationReport verify_chain_relation(int g) {
  if (g < 2) throw std::invalid_argument("verify_chain_relation: need g >= 2");
  return verify_chain_relation(chain_vectors(g, 4).vectors, g);
}

ChainRelationReport verify_chain_relation(const std::vector<IntVector>& chain, int g) {
  require_genus(g, "verify_chain_relation");
  IntegerSymplecticMatrix p = IntegerSymplecticMatrix::identity(g);
  for (const auto& v : chain) p = p * transvection_matrix(v, 1, g);
  ChainRelationReport report;
  report.g = g;
  IntegerSymplecticMatrix walk = p;
  for (int k = 1; k <= 1000; ++k) {
    if (walk.is_identity()) {
      report.order = k;
      break;
    }
    walk = walk * p;
  }
  report.p5_is_minus_identity = p.pow(5) == IntegerSymplecticMatrix::minus_identity(g);
  report.p10_is_identity = p.pow(10).is_identity();
  return report;
}

std::vector<IntVector> humphries_vectors(int g) {
  if (g < 2) throw std::invalid_argument("humphries_vectors: need g >= 2");
  std::vector<IntVector> out = chain_vectors(g, 2 * g).vectors;
  out.push_back(basis_a(g, 2));
  return out;
}

std::uint64_t symplectic_closure_size(const std::vector<IntVector>& vectors, int g, int p, std::uint64_t limit) {
  require_genus(g, "symplectic_closure_size");
  if (p < 2) throw std::invalid_argument("symplectic_closure_size: modulus must be at least 2");
  const int d = 2 * g;
  const std::size_t cells = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  {
    BigInt states = power(BigInt(p), static_cast<unsigned long>(cells));
    if (states > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw std::invalid_argument("symplectic_closure_size: matrices do not fit a 64-bit code");
  }
  // Right multiplication by I + s v (J v)^T is x -> x + s (x v) (J v)^T.
  struct Generator {
    std::vector<int> v;
    std::vector<int> w;
  };
  std::vector<Generator> gens;
  for (const auto& vec : vectors) {
    require_length(vec, g, "symplectic_closure_size");
    const IntVector w = apply_form(vec);
    Generator gen;
    for (int i = 0; i < d; ++i) {
      gen.v.push_back(reduce_mod(vec(i), p));
      gen.w.push_back(reduce_mod(w(i), p));
    }
    gens.push_back(std::move(gen));
  }
  auto encode = [&](const std::vector<int>& m) {
    std::uint64_t code = 0;
    for (std::size_t i = cells; i-- > 0;) code = code * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(m[i]);
    return code;
  };
  auto decode = [&](std::uint64_t code, std::vector<int>& m) {
    for (std::size_t i = 0; i < cells; ++i) {
      m[i] = static_cast<int>(code % static_cast<std::uint64_t>(p));
      code /= static_cast<std::uint64_t>(p);
    }
  };

  std::vector<int> start(cells, 0);
  for (int i = 0; i < d; ++i) start[static_cast<std::size_t>(i * d + i)] = 1;
  std::unordered_set<std::uint64_t> seen{encode(start)};
  std::deque<std::uint64_t> frontier{encode(start)};
  std::vector<int> x(cells);
  std::vector<int> y(cells);
  std::vector<int> xv(static_cast<std::size_t>(d));
  while (!frontier.empty()) {
    decode(frontier.front(), x);
    frontier.pop_front();
    for (const auto& gen : gens) {
      for (int r = 0; r < d; ++r) {
        long acc = 0;
        for (int c = 0; c < d; ++c) acc += static_cast<long>(x[static_cast<std::size_t>(r * d + c)]) * gen.v[static_cast<std::size_t>(c)];
        xv[static_cast<std::size_t>(r)] = static_cast<int>(acc % p);
      }
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          auto idx = static_cast<std::size_t>(r * d + c);
          y[idx] = (x[idx] + xv[static_cast<std::size_t>(r)] * gen.w[static_cast<std::size_t>(c)]) % p;
        }
      std::uint64_t code = encode(y);
      if (seen.insert(code).second) {
        if (seen.size() > limit)
          throw ResourceLimitExceeded("symplectic closure exceeds " + std::to_string(limit) + " elements");
        frontier.push_back(code);
      }
    }
  }
  return seen.size();
}

BigInt symplectic_group_order(int g, int p) {
  require_genus(g, "symplectic_group_order");
  BigInt out = power(BigInt(p), static_cast<unsigned long>(g) * static_cast<unsigned long>(g));
  for (int i = 1; i <= g; ++i) out *= power(BigInt(p), static_cast<unsigned long>(2 * i)) - 1;
  return out;
}

HumphriesReport humphries_generation_check(int g, int p) {
  if (g != 2 && g != 3) throw std::invalid_argument("humphries_generation_check: g must be 2 or 3");
  return humphries_generation_check(humphries_vectors(g), g, p);
}

HumphriesReport humphries_generation_check(const std::vector<IntVector>& vectors, int g, int p) {
  if (p != 2 && p != 3) throw std::invalid_argument("humphries_generation_check: p must be 2 or 3");
  HumphriesReport report;
  report.g = g;
  report.p = p;
  report.closure_size = symplectic_closure_size(vectors, g, p);
  report.group_order = symplectic_group_order(g, p);
  report.generates = BigInt(report.closure_size) == report.group_order;
  return report;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(bigint_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const IntegerSymplecticMatrix& m) { return to_json(m.entries()); }

nlohmann::json to_json(const ChainRelationReport& r) {
  return {{"g", r.g},
          {"order", r.order ? nlohmann::json(*r.order) : nlohmann::json(nullptr)},
          {"p5_is_minus_identity", r.p5_is_minus_identity},
          {"p10_is_identity", r.p10_is_identity}};
}

nlohmann::json to_json(const HumphriesReport& r) {
  return {{"g", r.g},
          {"p", r.p},
          {"closure_size", r.closure_size},
          {"group_order", bigint_json(r.group_order)},
          {"generates", r.generates}};
}

}  // namespace braidrep
