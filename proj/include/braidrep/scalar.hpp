#pragma once

// Exact scalar types and the dense linear algebra shared by the homology modules.
// Everything here is templated on the scalar so the same routines run over
// big integers, machine integers reduced mod p, and cyclotomic quotient rings.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace braidrep {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

BigInt binomial(long n, long k);
BigInt power(const BigInt& base, unsigned long exponent);
/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json bigint_json(const BigInt& v);

template <typename Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index size) {
  Matrix<Scalar> out(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) out(i, j) = Scalar(i == j ? 1 : 0);
  return out;
}

template <typename Scalar>
Matrix<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix<Scalar> out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = Scalar(0);
  return out;
}

/// Exact equality; Eigen's operator== is fine for exact scalars but spelled out
/// here so callers never reach for the fuzzy isApprox/isIdentity.
template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == Scalar(i == j ? 1 : 0))) return false;
  return true;
}

/// Product of two matrices by the schoolbook triple loop. Eigen's blocked GEMM
/// assumes a field-like scalar with cheap copies; this keeps custom ring scalars
/// on a straightforward path.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  Matrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      out(i, j) = acc;
    }
  return out;
}

/// a^e for e >= 0 by repeated squaring.
template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, unsigned long e) {
  Matrix<Scalar> result = identity_matrix<Scalar>(a.rows());
  Matrix<Scalar> base = a;
  while (e > 0) {
    if (e & 1UL) result = multiply(result, base);
    e >>= 1UL;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

/// Characteristic polynomial det(xI - A) by Berkowitz's division-free algorithm.
/// Coefficients are returned highest degree first, so out[0] == 1.
template <typename Scalar>
std::vector<Scalar> characteristic_polynomial(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: not square");
  const Eigen::Index n = a.rows();
  std::vector<Scalar> poly{Scalar(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    // A_{r+1} = [[A_r, C], [R, a_rr]]; Toeplitz column [1, -a_rr, -R C, -R A_r C, ...].
    std::vector<Scalar> column;
    column.reserve(static_cast<std::size_t>(r) + 2);
    column.push_back(Scalar(1));
    column.push_back(Scalar(0) - a(r, r));
    std::vector<Scalar> walk(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i) walk[static_cast<std::size_t>(i)] = a(i, r);
    for (Eigen::Index step = 0; step < r; ++step) {
      Scalar dot(0);
      for (Eigen::Index i = 0; i < r; ++i) dot += a(r, i) * walk[static_cast<std::size_t>(i)];
      column.push_back(Scalar(0) - dot);
      std::vector<Scalar> next(static_cast<std::size_t>(r), Scalar(0));
      for (Eigen::Index i = 0; i < r; ++i) {
        Scalar acc(0);
        for (Eigen::Index j = 0; j < r; ++j) acc += a(i, j) * walk[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i)] = acc;
      }
      walk = std::move(next);
    }
    std::vector<Scalar> updated(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < updated.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) updated[i] += column[i - j] * poly[j];
    poly = std::move(updated);
  }
  return poly;
}

/// Determinant over the integers by fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& a);

}  // namespace braidrep
