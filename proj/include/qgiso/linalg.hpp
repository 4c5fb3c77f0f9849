#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgiso/poly.hpp"

namespace qg {

/// Dense row-major square matrix.
template <class T>
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<T> a;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size) : n(size), a(size * size) {}
  T& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer det_bareiss(SquareMatrix<Integer> m);
/// Determinant over Q by Gaussian elimination with rational pivots.
Rational det_rational(SquareMatrix<Rational> m);

/// Unique polynomial of degree < xs.size() through the points, over Q.
/// Throws InternalError if the result has non-integer coefficients.
IntPoly interpolate_integer(std::span<const Integer> xs, std::span<const Integer> ys);

/// Arithmetic modulo primes p < 2^31.
namespace modp {

/// Distinct primes below 2^31, descending, generated on demand.
std::uint32_t prime(std::size_t index);

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(const Integer& x, std::uint32_t p);
std::uint32_t reduce(std::int64_t x, std::uint32_t p);

/// Determinant of an n x n matrix (row-major, entries < p); destroys `a`.
std::uint32_t det(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p);

/// Coefficients (low to high) of the interpolant through (xs[i], ys[i]).
std::vector<std::uint32_t> interpolate(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys,
                                       std::uint32_t p);

}  // namespace modp

/// Chinese remaindering of integer vectors with a known magnitude bound.
class CrtVector {
 public:
  explicit CrtVector(std::size_t size) : values_(size, Integer(0)), modulus_(1) {}
  void add(std::span<const std::uint32_t> residues, std::uint32_t p);
  const Integer& modulus() const noexcept { return modulus_; }
  /// Symmetric lift: values in (-modulus/2, modulus/2].
  std::vector<Integer> symmetric() const;

 private:
  std::vector<Integer> values_;
  Integer modulus_;
};

}  // namespace qg
