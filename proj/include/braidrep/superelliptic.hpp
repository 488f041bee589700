#pragma once

// Homology monodromy of the superelliptic family y^d = (x - x_1)...(x - x_n),
// modelled by the reduced Burau representation over Z[t]/(1 + t + ... + t^(d-1)).

#include "braidrep/braid.hpp"
#include "braidrep/cyclotomic.hpp"
#include "braidrep/scalar.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace braidrep {

using CycloMatrix = Matrix<CyclotomicPolyElement>;

/// (d - 1)(k - 1) for n = 2k. Odd n is rejected.
int superelliptic_genus(int d, int n);

/// Reduced Burau images of sigma_1..sigma_{n-1}: row i - 1 of sigma_i is (.., t, -t, 1, ..).
std::vector<CycloMatrix> burau_rep(int n, int d);
/// Exact inverses: row i - 1 of sigma_i^-1 is (.., 1, -t^-1, t^-1, ..).
std::vector<CycloMatrix> burau_inverses(int n, int d);
CycloMatrix burau_image(const BraidWord& word, int d);
bool burau_relations_hold(int n, int d);

CycloMatrix specialize(const CycloMatrix& m, int e);

/// The Z-linear map underlying a matrix over Z[t]/(P_d), in the basis t^j e_i.
IntMatrix regular_representation(const CycloMatrix& m);

/// Characteristic polynomials of the Z-linear maps agree after padding the smaller
/// matrix with an identity block.
bool same_stable_charpoly(const IntMatrix& a, const IntMatrix& b);

/// Words on which the degree-d monodromy is compared with the standard representation.
std::vector<BraidWord> comparison_words(int n);

/// Stable characteristic polynomials of the degree-d Burau image and of the standard
/// representation agree on every comparison word. n even, n >= 4.
bool compare_with_standard(int n, int d);
bool compare_d2_with_standard(int n);

struct NonTransvectionReport {
  int n = 0;
  bool nontrivial = false;                      // rho_3(sigma_1 sigma_3^-1) != I
  bool differs_from_standard = false;           // spectra differ from rho_s(sigma_1 sigma_3^-1)
  bool differs_from_negative_standard = false;  // same against rho_{-s}
  /// "certified" when all three hold, otherwise "inconclusive at homology level".
  std::string verdict;
};

/// Verdict from the three flags; any missing distinction is reported as inconclusive,
/// never as a refutation.
std::string non_transvection_verdict(const NonTransvectionReport& r);

/// n even, n >= 6.
NonTransvectionReport d3_not_transvection_check(int n);

nlohmann::json to_json(const CyclotomicPolyElement& x);
nlohmann::json to_json(const CycloMatrix& m);
nlohmann::json to_json(const NonTransvectionReport& r);

}  // namespace braidrep
