#pragma once

// Residues in Z[t] / (1 + t + ... + t^(d-1)), usable as an Eigen scalar.

#include "braidrep/scalar.hpp"

#include <string>
#include <vector>

namespace braidrep {

/// Canonical form: d - 1 integer coefficients of 1, t, ..., t^(d-2).
/// d == 0 marks an untyped integer constant (what Scalar(0) and Scalar(1) produce
/// inside generic matrix code); it adopts the modulus of whatever it meets.
class CyclotomicPolyElement {
 public:
  CyclotomicPolyElement() : CyclotomicPolyElement(0L) {}
  CyclotomicPolyElement(long constant);  // NOLINT(google-explicit-constructor)
  CyclotomicPolyElement(int d, std::vector<BigInt> coeffs);

  static CyclotomicPolyElement constant(int d, const BigInt& c);
  /// t^e for any integer e, using t^d = 1.
  static CyclotomicPolyElement t_power(int d, long e);

  int modulus() const noexcept { return d_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_constant() const;
  /// Constant term; throws unless is_constant().
  BigInt constant_value() const;

  /// Image under Z[t]/(P_d) -> Z[t]/(P_e), which exists when e divides d.
  CyclotomicPolyElement specialize(int e) const;
  CyclotomicPolyElement with_modulus(int d) const;

  std::string to_string() const;

  CyclotomicPolyElement& operator+=(const CyclotomicPolyElement& o);
  CyclotomicPolyElement& operator-=(const CyclotomicPolyElement& o);
  CyclotomicPolyElement& operator*=(const CyclotomicPolyElement& o);

  friend CyclotomicPolyElement operator+(CyclotomicPolyElement a, const CyclotomicPolyElement& b) { return a += b; }
  friend CyclotomicPolyElement operator-(CyclotomicPolyElement a, const CyclotomicPolyElement& b) { return a -= b; }
  friend CyclotomicPolyElement operator*(CyclotomicPolyElement a, const CyclotomicPolyElement& b) { return a *= b; }
  friend CyclotomicPolyElement operator-(const CyclotomicPolyElement& a) { return CyclotomicPolyElement(0L) - a; }
  friend bool operator==(const CyclotomicPolyElement& a, const CyclotomicPolyElement& b);
  friend bool operator!=(const CyclotomicPolyElement& a, const CyclotomicPolyElement& b) { return !(a == b); }

 private:
  void reduce();

  int d_;
  std::vector<BigInt> coeffs_;
};

}  // namespace braidrep

namespace Eigen {

template <>
struct NumTraits<braidrep::CyclotomicPolyElement> : GenericNumTraits<braidrep::CyclotomicPolyElement> {
  using Real = braidrep::CyclotomicPolyElement;
  using NonInteger = braidrep::CyclotomicPolyElement;
  using Literal = braidrep::CyclotomicPolyElement;
  using Nested = braidrep::CyclotomicPolyElement;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 8,
    MulCost = 32
  };
};

}  // namespace Eigen
