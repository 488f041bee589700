#include "braidrep/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace braidrep {

namespace {

int common_modulus(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("CyclotomicPolyElement: moduli " + std::to_string(a) + " and " + std::to_string(b) +
                              " differ");
}

}  // namespace

CyclotomicPolyElement::CyclotomicPolyElement(long constant) : d_(0), coeffs_{BigInt(constant)} {}

CyclotomicPolyElement::CyclotomicPolyElement(int d, std::vector<BigInt> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
  if (d_ < 2) throw std::invalid_argument("CyclotomicPolyElement: need d >= 2");
  reduce();
}

CyclotomicPolyElement CyclotomicPolyElement::constant(int d, const BigInt& c) {
  return CyclotomicPolyElement(d, std::vector<BigInt>{c});
}

CyclotomicPolyElement CyclotomicPolyElement::t_power(int d, long e) {
  if (d < 2) throw std::invalid_argument("CyclotomicPolyElement::t_power: need d >= 2");
  long r = e % d;
  if (r < 0) r += d;
  std::vector<BigInt> c(static_cast<std::size_t>(r) + 1, BigInt(0));
  c.back() = 1;
  return CyclotomicPolyElement(d, std::move(c));
}

void CyclotomicPolyElement::reduce() {
  // Fold modulo t^d - 1, then eliminate t^(d-1) = -(1 + t + ... + t^(d-2)).
  std::vector<BigInt> folded(static_cast<std::size_t>(d_), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) folded[i % folded.size()] += coeffs_[i];
  const BigInt top = folded.back();
  folded.pop_back();
  for (auto& c : folded) c -= top;
  coeffs_ = std::move(folded);
}

bool CyclotomicPolyElement::is_constant() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

BigInt CyclotomicPolyElement::constant_value() const {
  if (!is_constant()) throw std::domain_error("CyclotomicPolyElement: not a constant");
  return coeffs_.front();
}

CyclotomicPolyElement CyclotomicPolyElement::with_modulus(int d) const {
  if (d_ == d) return *this;
  if (d_ != 0) throw std::invalid_argument("CyclotomicPolyElement::with_modulus: element already typed");
  return CyclotomicPolyElement(d, coeffs_);
}

CyclotomicPolyElement CyclotomicPolyElement::specialize(int e) const {
  if (d_ == 0) return *this;
  if (e < 2 || d_ % e != 0)
    throw std::invalid_argument("CyclotomicPolyElement::specialize: " + std::to_string(e) + " does not divide " +
                                std::to_string(d_));
  return CyclotomicPolyElement(e, coeffs_);
}

std::string CyclotomicPolyElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const BigInt& c = coeffs_[i];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return first ? "0" : out.str();
}

CyclotomicPolyElement& CyclotomicPolyElement::operator+=(const CyclotomicPolyElement& o) {
  const int d = common_modulus(d_, o.d_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  d_ = d;
  if (d_ != 0) reduce();
  return *this;
}

CyclotomicPolyElement& CyclotomicPolyElement::operator-=(const CyclotomicPolyElement& o) {
  const int d = common_modulus(d_, o.d_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  d_ = d;
  if (d_ != 0) reduce();
  return *this;
}

CyclotomicPolyElement& CyclotomicPolyElement::operator*=(const CyclotomicPolyElement& o) {
  const int d = common_modulus(d_, o.d_);
  std::vector<BigInt> product(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(product);
  d_ = d;
  if (d_ != 0) reduce();
  return *this;
}

bool operator==(const CyclotomicPolyElement& a, const CyclotomicPolyElement& b) {
  const int d = common_modulus(a.d_, b.d_);
  if (d == 0) return a.coeffs_ == b.coeffs_;
  return a.with_modulus(d).coeffs_ == b.with_modulus(d).coeffs_;
}

}  // namespace braidrep
