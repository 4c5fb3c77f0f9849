#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of z^i; trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  /// z^n - 1
  static IntPoly power_minus_one(std::size_t n);
  /// z^n + 1
  static IntPoly power_plus_one(std::size_t n);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^i (zero beyond the degree).
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  /// Exponent of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;

  /// Non-negative gcd of all coefficients.
  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPoly primitive() const;

  IntPoly derivative() const;
  /// P(z^k).
  IntPoly inflate(std::size_t k) const;
  /// Largest d with P(z) = R(z^d); 0 for the zero polynomial.
  std::size_t exponent_gcd() const;
  /// R with P(z) = R(z^d); d must divide every exponent.
  IntPoly deflate(std::size_t d) const;
  /// z^deg P(1/z).
  IntPoly reversed() const;
  /// Removes the factor z^valuation.
  IntPoly without_monomial_factor() const;

  Rational eval(const Rational& x) const;
  long double eval_approx(long double x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Divides every coefficient by c; throws InternalError if inexact.
  IntPoly divexact(const Integer& c) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Quotient q with a = b*q if b divides a in Z[z]; sets ok=false otherwise.
IntPoly divide_if_exact(const IntPoly& a, const IntPoly& b, bool& ok);
/// Exact division in Z[z]; throws InternalError when b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Greatest common divisor in Z[z]: gcd of contents times the primitive
/// gcd, with positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Square-free decomposition of a primitive polynomial p = c * prod f_i^i.
/// Entry i-1 holds f_i (constant 1 when absent); trailing ones are dropped.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// n-th cyclotomic polynomial.
const IntPoly& cyclotomic(std::size_t n);
/// Euler phi for all m <= n.
std::vector<std::size_t> totients(std::size_t n);
/// All n with phi(n) <= bound, ascending.
std::vector<std::size_t> orders_with_totient_at_most(std::size_t bound);
/// Exponent of `factor` in p (p nonzero, factor nonconstant).
unsigned multiplicity(IntPoly p, const IntPoly& factor);

/// True iff a = c*b for some nonzero rational c.
bool proportional(const IntPoly& a, const IntPoly& b);

/// Polynomial in w whose coefficients are polynomials in z.
/// terms()[j] is the coefficient of w^j.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<IntPoly> w_coeffs);

  int w_degree() const noexcept { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<IntPoly>& terms() const noexcept { return terms_; }
  IntPoly w_coeff(std::size_t j) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer content() const;
  /// gcd in Z[z] of the w-coefficients (including integer content).
  IntPoly z_content() const;
  /// Integer-primitive, leading coefficient (max w power, then max z power) positive.
  BiPoly normalized() const;
  BiPoly divexact(const IntPoly& f) const;
  /// Q(z, z^m).
  IntPoly specialize_w_power(std::size_t m) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  void trim();
  std::vector<IntPoly> terms_;
};

}  // namespace qg
