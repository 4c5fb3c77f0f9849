#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qgiso/graph.hpp"
#include "qgiso/linalg.hpp"
#include "qgiso/poly.hpp"

namespace qg {

/// Directed copy of an edge. Edge e yields bond 2e (u -> v) and 2e+1 (v -> u).
using Bond = std::size_t;

/// Real orthogonal vertex scattering matrix S_v on 2E bonds:
/// S(b', b) = 2/d(v) - [b' reverses b] when b ends at v and b' starts at v.
class BondScattering {
 public:
  explicit BondScattering(const CombinatorialGraph& g);

  std::size_t dimension() const noexcept { return 2 * edges_.size(); }
  Vertex origin(Bond b) const;
  Vertex terminus(Bond b) const;
  static Bond reversal(Bond b) noexcept { return b ^ 1U; }
  Rational entry(Bond out, Bond in) const;
  SquareMatrix<Rational> dense() const;

  /// Nonzero entries of row `out` as (in-bond, numerator) with denominator valence(origin(out)).
  struct Term {
    Bond in;
    std::int64_t numerator;
  };
  const std::vector<Term>& row(Bond out) const { return rows_.at(out); }
  std::size_t row_denominator(Bond out) const { return valence_.at(origin(out)); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> valence_;
  std::vector<std::vector<Term>> rows_;
};

/// S_v of a metric graph; the graph must be connected.
BondScattering bond_scattering(const MetricGraph& g);

/// P(z) = det(I - S_v D(z)) with D(z) = diag(z^{L_e}); stored as
/// (1/denom) * sum coeffs[j] z^j, normalised so P(0) = 1. z = e^{i k unit}.
struct SecularPolynomial {
  std::vector<Integer> coeffs;
  Integer denom = 1;
  Rational unit = 1;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  IntPoly numerator() const { return IntPoly(coeffs); }
  Rational eval(const Rational& z) const;
  /// Largest d with P(z) = R(z^d); the key (unit*d, R) identifies the spectrum.
  SecularPolynomial reduced() const;
  friend bool operator==(const SecularPolynomial&, const SecularPolynomial&) = default;
  std::string to_string() const;
};

/// Builds the normalised representative from an integer multiple F of P
/// (F(0) must be positive).
SecularPolynomial make_secular(const IntPoly& f, const Rational& unit);

/// Q(z, w): det(I - S_v' D'(z, w)) for g with a pendant of symbolic length
/// attached at `attachment`; the pendant's bonds carry w = e^{ikc}.
/// Cleared to Z[z,w], content 1, lexicographic leading coefficient positive.
struct BivariateSecular {
  BiPoly q;
  Vertex attachment = 0;
  Rational unit = 1;
};

/// Modular evaluation-interpolation kernel, OpenMP-parallel over
/// (prime, evaluation point) pairs. The default entry point.
SecularPolynomial secular_polynomial(const MetricGraph& g);
BivariateSecular bivariate_secular(const MetricGraph& g, Vertex attachment);

/// Serial reference: exact Bareiss determinants at integer points and
/// Lagrange interpolation over Q. Kept for cross-checking and benchmarks.
SecularPolynomial secular_polynomial_reference(const MetricGraph& g);
BivariateSecular bivariate_secular_reference(const MetricGraph& g, Vertex attachment);

/// Invariant report for a secular polynomial of a graph with integer length L.
struct SecularChecks {
  bool constant_term_one = false;
  bool degree_is_2L = false;
  bool self_inversive = false;
  int symmetry_sign = 0;
};
SecularChecks check_secular(const SecularPolynomial& p, Length integer_length);

}  // namespace qg
