#include "braidrep/superelliptic.hpp"

#include "braidrep/symp.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidrep {

namespace {

using Elem = CyclotomicPolyElement;

CycloMatrix cyclo_identity(Eigen::Index size, int d) {
  CycloMatrix m(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) m(i, j) = Elem::constant(d, i == j ? 1 : 0);
  return m;
}

void require_burau_args(int n, int d, const char* where) {
  if (n < 3) throw std::invalid_argument(std::string(where) + ": need n >= 3");
  if (d < 2) throw std::invalid_argument(std::string(where) + ": need d >= 2");
}

void require_even(int n, int least, const char* where) {
  if (n % 2 != 0 || n < least)
    throw std::invalid_argument(std::string(where) + ": need even n >= " + std::to_string(least));
}

IntMatrix pad_identity(const IntMatrix& m, Eigen::Index size) {
  IntMatrix out = identity_matrix<BigInt>(size);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

}  // namespace

int superelliptic_genus(int d, int n) {
  if (d < 2) throw std::invalid_argument("superelliptic_genus: need d >= 2");
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("superelliptic_genus: the formula covers even n = 2k only");
  return (d - 1) * (n / 2 - 1);
}

std::vector<CycloMatrix> burau_rep(int n, int d) {
  require_burau_args(n, d, "burau_rep");
  const Eigen::Index size = n - 1;
  std::vector<CycloMatrix> out;
  for (Eigen::Index r = 0; r < size; ++r) {
    CycloMatrix m = cyclo_identity(size, d);
    if (r > 0) m(r, r - 1) = Elem::t_power(d, 1);
    m(r, r) = -Elem::t_power(d, 1);
    if (r + 1 < size) m(r, r + 1) = Elem::constant(d, 1);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CycloMatrix> burau_inverses(int n, int d) {
  require_burau_args(n, d, "burau_inverses");
  const Eigen::Index size = n - 1;
  std::vector<CycloMatrix> out;
  for (Eigen::Index r = 0; r < size; ++r) {
    CycloMatrix m = cyclo_identity(size, d);
    if (r > 0) m(r, r - 1) = Elem::constant(d, 1);
    m(r, r) = -Elem::t_power(d, -1);
    if (r + 1 < size) m(r, r + 1) = Elem::t_power(d, -1);
    out.push_back(std::move(m));
  }
  return out;
}

CycloMatrix burau_image(const BraidWord& word, int d) {
  const auto gens = burau_rep(word.strands(), d);
  const auto invs = burau_inverses(word.strands(), d);
  CycloMatrix out = cyclo_identity(word.strands() - 1, d);
  for (int letter : word.letters()) {
    const auto idx = static_cast<std::size_t>(std::abs(letter) - 1);
    out = multiply(out, letter > 0 ? gens[idx] : invs[idx]);
  }
  return out;
}

bool burau_relations_hold(int n, int d) {
  const auto gens = burau_rep(n, d);
  const auto invs = burau_inverses(n, d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_identity(multiply(gens[i], invs[i]))) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto& x = gens[i];
      const auto& y = gens[j];
      bool ok = j == i + 1 ? exactly_equal(multiply(multiply(x, y), x), multiply(multiply(y, x), y))
                           : exactly_equal(multiply(x, y), multiply(y, x));
      if (!ok) return false;
    }
  }
  return true;
}

CycloMatrix specialize(const CycloMatrix& m, int e) {
  CycloMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).specialize(e);
  return out;
}

IntMatrix regular_representation(const CycloMatrix& m) {
  int d = 0;
  for (Eigen::Index i = 0; i < m.rows() && d == 0; ++i)
    for (Eigen::Index j = 0; j < m.cols() && d == 0; ++j) d = m(i, j).modulus();
  if (d == 0) throw std::invalid_argument("regular_representation: matrix carries no modulus");
  const Eigen::Index block = d - 1;
  IntMatrix out = zero_matrix<BigInt>(m.rows() * block, m.cols() * block);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index c = 0; c < block; ++c) {
        // Column (j, c) holds the coordinates of m(i, j) * t^c in row block i.
        Elem image = m(i, j).with_modulus(d) * Elem::t_power(d, static_cast<long>(c));
        for (Eigen::Index r = 0; r < block; ++r) out(i * block + r, j * block + c) = image.coeffs()[static_cast<std::size_t>(r)];
      }
  return out;
}

bool same_stable_charpoly(const IntMatrix& a, const IntMatrix& b) {
  const Eigen::Index size = std::max(a.rows(), b.rows());
  return characteristic_polynomial(pad_identity(a, size)) == characteristic_polynomial(pad_identity(b, size));
}

std::vector<BraidWord> comparison_words(int n) {
  std::vector<BraidWord> words;
  for (int i = 1; i < n; ++i) words.push_back(BraidWord::generator(n, i));
  if (n >= 4) words.push_back(BraidWord(n, {1, -3}));
  words.push_back(BraidWord(n, {1, 2}));
  std::vector<int> full;
  for (int i = 1; i < n; ++i) full.push_back(i);
  words.push_back(BraidWord(n, full));
  return words;
}

bool compare_with_standard(int n, int d) {
  require_even(n, 4, "compare_with_standard");
  const auto standard = standard_rep(n, 1);
  for (const auto& w : comparison_words(n))
    if (!same_stable_charpoly(regular_representation(burau_image(w, d)), standard.evaluate(w).entries())) return false;
  return true;
}

bool compare_d2_with_standard(int n) { return compare_with_standard(n, 2); }

std::string non_transvection_verdict(const NonTransvectionReport& r) {
  return r.nontrivial && r.differs_from_standard && r.differs_from_negative_standard ? "certified"
                                                                                    : "inconclusive at homology level";
}

NonTransvectionReport d3_not_transvection_check(int n) {
  require_even(n, 6, "d3_not_transvection_check");
  const BraidWord w(n, {1, -3});
  const IntMatrix rho3 = regular_representation(burau_image(w, 3));
  NonTransvectionReport report;
  report.n = n;
  report.nontrivial = !is_identity(rho3);
  report.differs_from_standard = !same_stable_charpoly(rho3, standard_rep(n, 1).evaluate(w).entries());
  report.differs_from_negative_standard = !same_stable_charpoly(rho3, standard_rep(n, -1).evaluate(w).entries());
  report.verdict = non_transvection_verdict(report);
  return report;
}

nlohmann::json to_json(const CyclotomicPolyElement& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(bigint_json(c));
  return coeffs;
}

nlohmann::json to_json(const CycloMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const NonTransvectionReport& r) {
  return {{"n", r.n},
          {"nontrivial", r.nontrivial},
          {"differs_from_standard", r.differs_from_standard},
          {"differs_from_negative_standard", r.differs_from_negative_standard},
          {"verdict", r.verdict}};
}

}  // namespace braidrep
