#pragma once

// Integer symplectic representations on first homology: transvections, chains,
// the standard and negative-standard braid representations, and homology-level
// checks of the lantern, chain and Humphries relations.
//
// Conventions: basis a_1..a_g, b_1..b_g; J = [[0, I], [-I, 0]]; <x, y> = x^T J y,
// so <a_i, b_i> = 1. The twist along v with sign s acts by x -> x + s <x, v> v.

#include "braidrep/braid.hpp"
#include "braidrep/scalar.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace braidrep {

IntMatrix symplectic_form(int g);
BigInt symplectic_pairing(const IntVector& x, const IntVector& y);

/// 2g x 2g integer matrix with M^T J M = J and det M = 1, both checked on construction.
class IntegerSymplecticMatrix {
 public:
  explicit IntegerSymplecticMatrix(IntMatrix entries);

  static IntegerSymplecticMatrix identity(int g);
  static IntegerSymplecticMatrix minus_identity(int g);

  int genus() const noexcept { return static_cast<int>(entries_.rows() / 2); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const BigInt& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  /// -J M^T J, exact.
  IntegerSymplecticMatrix inverse() const;
  IntegerSymplecticMatrix pow(long exponent) const;
  bool is_identity() const { return braidrep::is_identity(entries_); }

  friend IntegerSymplecticMatrix operator*(const IntegerSymplecticMatrix& a, const IntegerSymplecticMatrix& b);
  friend bool operator==(const IntegerSymplecticMatrix& a, const IntegerSymplecticMatrix& b) {
    return exactly_equal(a.entries_, b.entries_);
  }

 private:
  struct Trusted {};
  IntegerSymplecticMatrix(IntMatrix entries, Trusted) : entries_(std::move(entries)) {}

  IntMatrix entries_;
};

bool is_symplectic(const IntMatrix& m);

/// Homology action of the twist along v: I + sign * v (J v)^T. sign must be +1 or -1.
IntegerSymplecticMatrix transvection_matrix(const IntVector& v, int sign, int g);

IntVector basis_a(int g, int i);  // a_i, 1-based
IntVector basis_b(int g, int i);  // b_i, 1-based

struct ChainVectors {
  int g = 0;
  std::vector<IntVector> vectors;
};

/// v_1 = a_1, v_{2i} = b_i, v_{2i+1} = a_i + a_{i+1}, and v_{2g+1} = a_g at the end of the
/// chain. Requires 0 <= length <= 2g + 1.
ChainVectors chain_vectors(int g, int length);

/// Consecutive pairings +-1, distant pairings 0, every vector primitive.
bool has_chain_pattern(const ChainVectors& chain);

IntVector embed_vector(const IntVector& v, int g);

struct HomologyRepresentation {
  int n = 0;
  int g = 0;
  std::vector<IntegerSymplecticMatrix> gen_images;

  IntegerSymplecticMatrix evaluate(const BraidWord& word) const;
  /// Braid relation for adjacent images and commutation for distant ones.
  bool satisfies_relations() const;
};

/// sigma_i -> twist along the i-th chain vector with the given sign, on the genus floor((n-1)/2).
HomologyRepresentation standard_rep(int n, int sign);
/// Same chain placed in the first handles of a larger genus g >= floor((n-1)/2).
HomologyRepresentation standard_rep(int n, int sign, int g);

/// sigma_i -> phi * rho(sigma_i). Throws std::invalid_argument unless phi commutes with every image.
HomologyRepresentation transvect_representation(const HomologyRepresentation& r, const IntegerSymplecticMatrix& phi);

/// A random element of Sp(2h, Z) built from `factors` random basis and sum transvections.
IntegerSymplecticMatrix random_symplectic(int h, int factors, std::mt19937_64& rng);

/// A random phi commuting with standard_rep(n, sign, g) for g > floor((n-1)/2):
/// +-I on the chain handles and a random symplectic block on the remaining handles.
IntegerSymplecticMatrix random_commuting_element(int n, int g, std::mt19937_64& rng);

/// { k in [-kmax, kmax] : A^k B^k A^k = B^k A^k B^k } for A, B the twists along a_1, b_1.
std::vector<int> braid_power_test(int g, int kmax);

/// Seven classes of a lantern: boundary classes c, b_1, b_2, b_3 and interior classes a_1, a_2, a_3.
struct LanternConfiguration {
  int g = 0;
  IntVector c;
  std::array<IntVector, 3> a;
  std::array<IntVector, 3> b;
};

/// T_c == T_{a_1} T_{b_1}^-1 T_{a_2} T_{b_2}^-1 T_{a_3} T_{b_3}^-1 on homology.
bool verify_lantern(const LanternConfiguration& config);
/// Four-holed sphere in S_3 with boundary classes a_1, a_2, a_3, -(a_1+a_2+a_3).
LanternConfiguration genus3_lantern();

struct ChainRelationReport {
  int g = 0;
  std::optional<int> order;  // multiplicative order of P, when at most the search limit
  bool p5_is_minus_identity = false;
  bool p10_is_identity = false;
};

/// P = product of the twists along the first four chain vectors of genus g >= 2.
ChainRelationReport verify_chain_relation(int g);
ChainRelationReport verify_chain_relation(const std::vector<IntVector>& chain, int g);

/// Chain v_1..v_{2g} followed by a_2.
std::vector<IntVector> humphries_vectors(int g);

/// Size of the subgroup of Sp(2g, F_p) generated by the twists along the vectors,
/// by breadth-first closure. Throws ResourceLimitExceeded past `limit` elements.
std::uint64_t symplectic_closure_size(const std::vector<IntVector>& vectors, int g, int p,
                                      std::uint64_t limit = 10'000'000);

/// |Sp(2g, F_p)| = p^(g^2) prod_{i=1..g} (p^(2i) - 1).
BigInt symplectic_group_order(int g, int p);

struct HumphriesReport {
  int g = 0;
  int p = 0;
  std::uint64_t closure_size = 0;
  BigInt group_order;
  bool generates = false;
};

/// g in {2, 3}, p in {2, 3}.
HumphriesReport humphries_generation_check(int g, int p);
HumphriesReport humphries_generation_check(const std::vector<IntVector>& vectors, int g, int p);

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const IntegerSymplecticMatrix& m);
nlohmann::json to_json(const ChainRelationReport& r);
nlohmann::json to_json(const HumphriesReport& r);

}  // namespace braidrep
