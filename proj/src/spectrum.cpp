#include "qgiso/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "qgiso/error.hpp"

namespace qg {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

/// Coefficients as long doubles, scaled by a common power of two so the
/// largest keeps about 60 significant bits.
std::vector<long double> scaled_coefficients(const IntPoly& f) {
  std::size_t bits = 0;
  for (const auto& c : f.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const std::size_t shift = bits > 60 ? bits - 60 : 0;
  std::vector<long double> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Integer t;
    mpz_tdiv_q_2exp(t.get_mpz_t(), c.get_mpz_t(), shift);
    out.push_back(static_cast<long double>(t.get_d()));
  }
  return out;
}

bool is_palindromic(const IntPoly& f) {
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

}  // namespace

std::vector<long double> unit_circle_arguments(const IntPoly& f) {
  const int m = f.degree();
  if (m <= 0) return {};
  if (m % 2 != 0 || !is_palindromic(f))
    throw InternalError("factor is not palindromic of even degree: " + f.to_string());
  // f(e^{i theta}) = e^{i m theta / 2} T(theta), T real and even in theta.
  const auto c = scaled_coefficients(f);
  const int h = m / 2;
  auto T = [&](long double theta) {
    long double s = c[static_cast<std::size_t>(h)];
    for (int j = 1; j <= h; ++j) s += 2 * c[static_cast<std::size_t>(h + j)] * std::cos(j * theta);
    return s;
  };
  // Roots come in pairs theta, 2 pi - theta; none at 0 or pi.
  const auto wanted = static_cast<std::size_t>(h);
  for (std::size_t grid = 32 * static_cast<std::size_t>(m); grid <= (std::size_t{1} << 24); grid *= 4) {
    std::vector<std::pair<long double, long double>> brackets;
    long double prev_t = 0, prev_v = T(0);
    for (std::size_t i = 1; i <= grid; ++i) {
      const long double t = kPi * static_cast<long double>(i) / static_cast<long double>(grid);
      const long double v = T(t);
      if ((v < 0) != (prev_v < 0)) brackets.emplace_back(prev_t, t);
      prev_t = t;
      prev_v = v;
    }
    if (brackets.size() != wanted) continue;
    std::vector<long double> roots;
    for (auto [lo, hi] : brackets) {
      long double vlo = T(lo);
      for (int it = 0; it < 200 && hi - lo > 1e-13L; ++it) {
        const long double mid = (lo + hi) / 2;
        const long double vm = T(mid);
        if ((vm < 0) == (vlo < 0)) {
          lo = mid;
          vlo = vm;
        } else {
          hi = mid;
        }
      }
      roots.push_back((lo + hi) / 2);
    }
    const std::size_t half = roots.size();
    for (std::size_t i = half; i-- > 0;) roots.push_back(2 * kPi - roots[i]);
    return roots;
  }
  throw InternalError("could not isolate unit-circle roots of " + f.to_string());
}

SecularFactorization factor_secular(const SecularPolynomial& p) {
  SecularFactorization out;
  IntPoly rest = p.numerator().primitive();
  const auto totient = totients(2 * static_cast<std::size_t>(std::max(1, rest.degree())) *
                                static_cast<std::size_t>(std::max(1, rest.degree())));
  for (std::size_t n : orders_with_totient_at_most(static_cast<std::size_t>(std::max(0, rest.degree())))) {
    if (rest.degree() <= 0) break;
    if (totient[n] > static_cast<std::size_t>(rest.degree())) continue;
    const IntPoly& phi = cyclotomic(n);
    unsigned e = 0;
    for (;;) {
      bool ok = false;
      IntPoly q = divide_if_exact(rest, phi, ok);
      if (!ok) break;
      rest = std::move(q);
      ++e;
    }
    if (e) out.cyclotomic.push_back({n, e});
  }
  if (rest.degree() > 0) {
    auto parts = squarefree_decomposition(rest);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() <= 0) continue;
      SecularFactorization::Algebraic a;
      a.factor = parts[i].primitive();
      a.multiplicity = static_cast<unsigned>(i + 1);
      a.theta = unit_circle_arguments(a.factor);
      out.algebraic.push_back(std::move(a));
    }
  }
  return out;
}

SpectrumReport eigenfrequencies(const SecularPolynomial& p, const SpectrumWindow& window) {
  return eigenfrequencies(factor_secular(p), p.unit, window);
}

SpectrumReport eigenfrequencies(const SecularFactorization& f, const Rational& unit, const SpectrumWindow& window) {
  if (!window.k_max && !window.count) throw InvalidArgument("spectrum window needs k_max or count");
  // One period of roots, ordered by argument.
  struct Proto {
    long double theta;
    Eigenfrequency e;
  };
  std::vector<Proto> protos;
  for (const auto& c : f.cyclotomic) {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < c.order; ++a) {
      if (std::gcd(a, c.order) != 1) continue;
      Eigenfrequency e;
      e.kind = Eigenfrequency::Kind::exact;
      e.factor = cyclotomic(c.order);
      e.order = c.order;
      e.root_index = idx++;
      e.multiplicity = c.multiplicity;
      // k unit = 2 pi a / n  ->  k / pi = 2a / (n unit)
      e.k_over_pi = Rational(Integer(static_cast<unsigned long>(2 * a)), Integer(static_cast<unsigned long>(c.order)));
      e.k_over_pi.canonicalize();
      protos.push_back({2 * kPi * static_cast<long double>(a) / static_cast<long double>(c.order), std::move(e)});
    }
  }
  for (const auto& a : f.algebraic)
    for (std::size_t i = 0; i < a.theta.size(); ++i) {
      Eigenfrequency e;
      e.kind = Eigenfrequency::Kind::algebraic;
      e.factor = a.factor;
      e.root_index = i;
      e.multiplicity = a.multiplicity;
      protos.push_back({a.theta[i], std::move(e)});
    }
  std::stable_sort(protos.begin(), protos.end(), [](const Proto& x, const Proto& y) { return x.theta < y.theta; });

  SpectrumReport r;
  r.unit = unit;
  if (protos.empty()) return r;
  const long double u = static_cast<long double>(unit.get_d());
  const Rational inv_unit = 1 / unit;
  for (std::uint64_t period = 0;; ++period) {
    if (window.k_max && 2 * kPi * static_cast<long double>(period) / u > *window.k_max) break;
    for (const auto& pr : protos) {
      if (period == 0 && pr.theta == 0) continue;  // k = 0, reported separately
      Eigenfrequency e = pr.e;
      e.period = period;
      e.k = (pr.theta + 2 * kPi * static_cast<long double>(period)) / u;
      if (window.k_max && e.k > *window.k_max) break;
      if (e.kind == Eigenfrequency::Kind::exact) {
        e.k_over_pi = (e.k_over_pi + Rational(Integer(static_cast<unsigned long>(2 * period)))) * inv_unit;
        e.k_over_pi.canonicalize();
      }
      r.entries.push_back(std::move(e));
      if (window.count && r.entries.size() >= *window.count) return r;
    }
  }
  return r;
}

std::size_t counting_function(const SpectrumReport& r, long double K) {
  std::size_t n = 0;
  for (const auto& e : r.entries)
    if (e.k <= K) n += e.multiplicity;
  return n;
}

unsigned multiplicity_at(const SecularPolynomial& p, std::int64_t a, std::int64_t n) {
  if (n <= 0) throw InvalidArgument("root of unity order must be positive");
  std::int64_t r = ((a % n) + n) % n;
  const std::int64_t order = n / std::gcd(r, n);
  return multiplicity(p.numerator(), cyclotomic(static_cast<std::size_t>(order)));
}

SecularPolynomial rescaled(const SecularPolynomial& p, const Rational& new_unit) {
  Rational ratio = p.unit / new_unit;
  ratio.canonicalize();
  if (ratio.get_den() != 1 || ratio <= 0) throw InvalidArgument("new unit must divide the old one");
  SecularPolynomial r = p;
  r.coeffs = p.numerator().inflate(ratio.get_num().get_ui()).coeffs();
  r.unit = new_unit;
  return r;
}

bool same_spectrum(const SecularPolynomial& a, const SecularPolynomial& b) {
  const Rational la = a.unit * Rational(static_cast<unsigned long>(a.degree()));
  const Rational lb = b.unit * Rational(static_cast<unsigned long>(b.degree()));
  if (la != lb) throw IncomparableError("different total lengths " + to_string(la / 2) + " and " + to_string(lb / 2));
  const Rational u = common_unit(a.unit, b.unit);
  return rescaled(a, u) == rescaled(b, u);
}

bool is_isospectral(const MetricGraph& g1, const MetricGraph& g2) {
  auto [a, b] = common_rescale(g1, g2);
  return secular_polynomial(a) == secular_polynomial(b);
}

long double unit_circle_deviation(const IntPoly& p) {
  IntPoly f = p.without_monomial_factor();
  if (f.degree() <= 0) return 0;
  IntPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) f = divexact(f, g);
  const auto c = scaled_coefficients(f);
  const int m = f.degree();
  using C = std::complex<long double>;
  std::vector<C> z(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) z[static_cast<std::size_t>(k)] = std::polar(1.0L, 2 * kPi * (k + 0.25L) / m);
  auto eval = [&](C x, C& d) {
    C v = c.back();
    d = 0;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      d = d * x + v;
      v = v * x + c[j];
    }
    return v;
  };
  for (int it = 0; it < 1000; ++it) {
    long double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      C d;
      C v = eval(z[k], d);
      if (v == C(0)) continue;
      C ratio = v / d;
      C sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      C step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-18L) break;
  }
  long double dev = 0;
  for (const auto& x : z) dev = std::max(dev, std::fabs(std::abs(x) - 1));
  return dev;
}

}  // namespace qg
