#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgiso/graph.hpp"
#include "qgiso/poly.hpp"
#include "qgiso/secular.hpp"

namespace qg {

/// P = const * prod Phi_n^{e_n} * prod f_i^{i}, the f_i squarefree, coprime
/// to each other and to every cyclotomic polynomial.
struct SecularFactorization {
  struct Cyclotomic {
    std::size_t order;
    unsigned multiplicity;
  };
  struct Algebraic {
    IntPoly factor;
    unsigned multiplicity;
    /// Arguments of the unit-circle roots in [0, 2pi), ascending.
    std::vector<long double> theta;
  };
  std::vector<Cyclotomic> cyclotomic;
  std::vector<Algebraic> algebraic;
};

/// Throws InternalError if a non-cyclotomic factor has roots off the unit circle.
SecularFactorization factor_secular(const SecularPolynomial& p);

/// Sorted unit-circle arguments of a squarefree self-inversive integer
/// polynomial without roots at z = +-1, bisected to 1e-12.
std::vector<long double> unit_circle_arguments(const IntPoly& f);

struct Eigenfrequency {
  enum class Kind { exact, algebraic };
  Kind kind = Kind::exact;
  /// Exact entries: k = k_over_pi * pi.
  Rational k_over_pi;
  /// Phi_n for exact entries, the squarefree factor otherwise.
  IntPoly factor;
  std::size_t order = 0;  // n for exact entries
  /// Position of z0 = e^{ik unit} among the factor's roots, ordered by argument in [0, 2pi).
  std::size_t root_index = 0;
  /// k unit = arg(z0) + 2 pi period.
  std::uint64_t period = 0;
  long double k = 0;
  unsigned multiplicity = 0;
};

/// Either every eigenfrequency in (0, k_max] or the first `count`.
struct SpectrumWindow {
  std::optional<long double> k_max;
  std::optional<std::size_t> count;
};

struct SpectrumReport {
  Rational unit;
  /// k = 0 always has multiplicity one on a connected graph.
  unsigned k0_multiplicity = 1;
  std::vector<Eigenfrequency> entries;
};

SpectrumReport eigenfrequencies(const SecularPolynomial& p, const SpectrumWindow& window);
SpectrumReport eigenfrequencies(const SecularFactorization& f, const Rational& unit, const SpectrumWindow& window);

/// Number of eigenfrequencies in (0, K], with multiplicity.
std::size_t counting_function(const SpectrumReport& r, long double K);

/// Exponent of Phi_n in P where z0 = e^{2 pi i a/n}.
unsigned multiplicity_at(const SecularPolynomial& p, std::int64_t a, std::int64_t n);

/// The same polynomial expressed in a finer unit (unit / new_unit must be an integer).
SecularPolynomial rescaled(const SecularPolynomial& p, const Rational& new_unit);
/// Same spectrum: identical after expressing both in the finer common unit.
/// Throws IncomparableError if the total lengths differ.
bool same_spectrum(const SecularPolynomial& a, const SecularPolynomial& b);
/// Exact isospectrality of two connected metric graphs of equal total length.
bool is_isospectral(const MetricGraph& g1, const MetricGraph& g2);

/// Largest | |z| - 1 | over all complex roots of p's squarefree part,
/// by Aberth iteration in long double. Diagnostic only.
long double unit_circle_deviation(const IntPoly& p);

}  // namespace qg
