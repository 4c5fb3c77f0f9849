#include "qgiso/secular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <omp.h>

#include "qgiso/error.hpp"

namespace qg {

// ------------------------------------------------------------ BondScattering

BondScattering::BondScattering(const CombinatorialGraph& g)
    : edges_(g.edges()), valence_(g.valences()), rows_(2 * g.n_edges()) {
  // Bonds leaving each vertex and bonds arriving at it.
  std::vector<std::vector<Bond>> arriving(g.n_vertices());
  for (Bond b = 0; b < dimension(); ++b) arriving[terminus(b)].push_back(b);
  for (Bond out = 0; out < dimension(); ++out) {
    const Vertex v = origin(out);
    const auto d = static_cast<std::int64_t>(valence_[v]);
    for (Bond in : arriving[v]) rows_[out].push_back(Term{in, 2 - (reversal(in) == out ? d : 0)});
    std::erase_if(rows_[out], [](const Term& t) { return t.numerator == 0; });
  }
}

Vertex BondScattering::origin(Bond b) const {
  const Edge& e = edges_.at(b / 2);
  return (b % 2 == 0) ? e.u : e.v;
}

Vertex BondScattering::terminus(Bond b) const {
  const Edge& e = edges_.at(b / 2);
  return (b % 2 == 0) ? e.v : e.u;
}

Rational BondScattering::entry(Bond out, Bond in) const {
  for (const auto& t : rows_.at(out))
    if (t.in == in) {
      Rational r(t.numerator, static_cast<long>(row_denominator(out)));
      r.canonicalize();
      return r;
    }
  return 0;
}

SquareMatrix<Rational> BondScattering::dense() const {
  SquareMatrix<Rational> m(dimension());
  for (Bond out = 0; out < dimension(); ++out)
    for (const auto& t : rows_[out]) {
      Rational r(t.numerator, static_cast<long>(row_denominator(out)));
      r.canonicalize();
      m(out, t.in) = r;
    }
  return m;
}

BondScattering bond_scattering(const MetricGraph& g) {
  if (!g.graph().is_connected()) throw InvalidArgument("bond scattering requires a connected graph");
  return BondScattering(g.graph());
}

// ------------------------------------------------------------ SecularPolynomial

Rational SecularPolynomial::eval(const Rational& z) const {
  Rational r = numerator().eval(z) / Rational(denom);
  r.canonicalize();
  return r;
}

SecularPolynomial SecularPolynomial::reduced() const {
  IntPoly p = numerator();
  const std::size_t d = p.exponent_gcd();
  if (d <= 1) return *this;
  SecularPolynomial r;
  r.coeffs = p.deflate(d).coeffs();
  r.denom = denom;
  r.unit = unit * Rational(static_cast<unsigned long>(d));
  r.unit.canonicalize();
  return r;
}

std::string SecularPolynomial::to_string() const {
  std::ostringstream os;
  os << "(" << numerator().to_string() << ")";
  if (denom != 1) os << "/" << denom;
  return os.str();
}

SecularPolynomial make_secular(const IntPoly& f, const Rational& unit) {
  if (f.is_zero() || f.coeff(0) <= 0) throw InternalError("secular determinant must have positive constant term");
  const Integer g = f.content();
  SecularPolynomial p;
  p.coeffs = f.divexact(g).coeffs();
  p.denom = p.coeffs.front();
  p.unit = unit;
  p.unit.canonicalize();
  return p;
}

SecularChecks check_secular(const SecularPolynomial& p, Length integer_length) {
  SecularChecks c;
  c.constant_term_one = !p.coeffs.empty() && p.coeffs.front() == p.denom;
  c.degree_is_2L = p.coeffs.size() == static_cast<std::size_t>(2 * integer_length + 1);
  if (!p.coeffs.empty() && abs(p.coeffs.back()) == abs(p.coeffs.front()) && p.coeffs.front() != 0) {
    const int s = sgn(p.coeffs.back()) * sgn(p.coeffs.front());
    bool ok = true;
    const std::size_t n = p.coeffs.size() - 1;
    for (std::size_t j = 0; j <= n && ok; ++j) ok = (p.coeffs[j] == s * p.coeffs[n - j]);
    c.self_inversive = ok;
    c.symmetry_sign = ok ? s : 0;
  }
  return c;
}

// ------------------------------------------------------------ assembly

namespace {

/// Integer-scaled matrix A(z, w) = diag(d) - sum coeff * z^zexp * w^wexp,
/// equal to Lambda * (I - S_v D(z, w)) with row scales d = valence of the
/// bond's origin.
struct BondSystem {
  struct Term {
    std::uint32_t row, col;
    std::int64_t coeff;
    std::uint32_t zexp, wexp;
  };
  std::size_t n = 0;
  std::vector<std::int64_t> diag;
  std::vector<Term> terms;
  std::size_t z_degree = 0;
  std::size_t w_degree = 0;
  std::uint32_t max_zexp = 0;
  double log2_bound = 0;
};

/// zexp[e] / wexp[e] give the monomial carried by both bonds of edge e.
BondSystem assemble(const CombinatorialGraph& g, const std::vector<std::uint32_t>& zexp,
                    const std::vector<std::uint32_t>& wexp) {
  BondScattering s(g);
  BondSystem sys;
  sys.n = s.dimension();
  sys.diag.resize(sys.n);
  std::size_t zdeg = 0, wdeg = 0;
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    zdeg += 2 * zexp[e];
    wdeg += 2 * wexp[e];
    sys.max_zexp = std::max(sys.max_zexp, zexp[e]);
  }
  sys.z_degree = zdeg;
  sys.w_degree = wdeg;
  for (Bond out = 0; out < sys.n; ++out) {
    const auto d = static_cast<std::int64_t>(s.row_denominator(out));
    sys.diag[out] = d;
    std::map<std::size_t, double> col_mag;
    col_mag[out] += static_cast<double>(d);
    for (const auto& t : s.row(out)) {
      sys.terms.push_back(BondSystem::Term{static_cast<std::uint32_t>(out), static_cast<std::uint32_t>(t.in),
                                           t.numerator, zexp[t.in / 2], wexp[t.in / 2]});
      col_mag[t.in] += std::fabs(static_cast<double>(t.numerator));
    }
    double sq = 0;
    for (auto& [c, m] : col_mag) sq += m * m;
    sys.log2_bound += 0.5 * std::log2(sq);
  }
  return sys;
}

void require_connected(const MetricGraph& g) {
  if (g.n_edges() == 0) throw InvalidArgument("secular polynomial needs at least one edge");
  if (!g.graph().is_connected()) throw InvalidArgument("secular polynomial requires a connected graph");
}

BondSystem univariate_system(const MetricGraph& g) {
  std::vector<std::uint32_t> zexp(g.n_edges()), wexp(g.n_edges(), 0);
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    if (g.length(e) > (1 << 24)) throw UnsupportedError("edge length too large for exact evaluation");
    zexp[e] = static_cast<std::uint32_t>(g.length(e));
  }
  return assemble(g.graph(), zexp, wexp);
}

BondSystem pendant_system(const MetricGraph& g, Vertex v) {
  if (v >= g.n_vertices()) throw InvalidArgument("attachment vertex out of range");
  std::vector<Edge> edges = g.edges();
  const auto leaf = static_cast<Vertex>(g.n_vertices());
  edges.push_back(Edge{v, leaf});
  CombinatorialGraph ext(g.n_vertices() + 1, std::move(edges));
  std::vector<std::uint32_t> zexp(ext.n_edges(), 0), wexp(ext.n_edges(), 0);
  for (std::size_t e = 0; e < g.n_edges(); ++e) zexp[e] = static_cast<std::uint32_t>(g.length(e));
  wexp.back() = 1;
  return assemble(ext, zexp, wexp);
}

std::uint32_t eval_det_mod(const BondSystem& sys, std::uint32_t z0, std::uint32_t w0, std::uint32_t p,
                           std::vector<std::uint32_t>& scratch) {
  const std::size_t n = sys.n;
  std::vector<std::uint32_t> zpow(sys.max_zexp + 1);
  zpow[0] = 1;
  for (std::size_t i = 1; i < zpow.size(); ++i) zpow[i] = modp::mul(zpow[i - 1], z0, p);
  const std::uint32_t wpow[2] = {1, w0};
  scratch.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) scratch[i * n + i] = modp::reduce(sys.diag[i], p);
  for (const auto& t : sys.terms) {
    std::uint32_t v = modp::mul(modp::reduce(t.coeff, p), modp::mul(zpow[t.zexp], wpow[t.wexp], p), p);
    auto& cell = scratch[t.row * n + t.col];
    cell = modp::sub(cell, v, p);
  }
  return modp::det(scratch, n, p);
}

/// Integer coefficients f[w][z] of det A(z, w), by evaluation at
/// z = 0..z_degree, w = 0..w_degree modulo enough primes to exceed the
/// Hadamard bound, then Chinese remaindering.
std::vector<IntPoly> solve_modular(const BondSystem& sys) {
  const std::size_t nz = sys.z_degree + 1;
  const std::size_t nw = sys.w_degree + 1;
  std::size_t n_primes = 0;
  double bits = 0;
  while (bits < sys.log2_bound + 2.0) bits += std::log2(static_cast<double>(modp::prime(n_primes++)));

  const std::size_t per_prime = nz * nw;
  std::vector<std::uint32_t> values(n_primes * per_prime);
  const auto total = static_cast<std::int64_t>(values.size());
  const bool parallel = total > 8 && sys.n >= 8 && !omp_in_parallel();
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint32_t> scratch;
#pragma omp for schedule(dynamic)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto i = static_cast<std::size_t>(idx);
      const std::size_t k = i / per_prime;
      const std::size_t a = (i % per_prime) / nz;
      const std::size_t b = i % nz;
      values[i] = eval_det_mod(sys, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a), modp::prime(k),
                               scratch);
    }
  }

  CrtVector crt(per_prime);
  std::vector<std::uint32_t> zs(nz), ws(nw);
  for (std::size_t b = 0; b < nz; ++b) zs[b] = static_cast<std::uint32_t>(b);
  for (std::size_t a = 0; a < nw; ++a) ws[a] = static_cast<std::uint32_t>(a);
  for (std::size_t k = 0; k < n_primes; ++k) {
    const std::uint32_t p = modp::prime(k);
    // coeffs_by_w[a][j]: coefficient of z^j at w = ws[a]
    std::vector<std::vector<std::uint32_t>> by_w(nw);
    for (std::size_t a = 0; a < nw; ++a)
      by_w[a] = modp::interpolate(zs, std::span(values).subspan(k * per_prime + a * nz, nz), p);
    std::vector<std::uint32_t> flat(per_prime);
    std::vector<std::uint32_t> col(nw);
    for (std::size_t j = 0; j < nz; ++j) {
      for (std::size_t a = 0; a < nw; ++a) col[a] = by_w[a][j];
      auto wc = modp::interpolate(ws, col, p);
      for (std::size_t l = 0; l < nw; ++l) flat[l * nz + j] = wc[l];
    }
    crt.add(flat, p);
  }
  auto lifted = crt.symmetric();
  std::vector<IntPoly> out;
  out.reserve(nw);
  for (std::size_t l = 0; l < nw; ++l)
    out.emplace_back(std::vector<Integer>(lifted.begin() + static_cast<std::ptrdiff_t>(l * nz),
                                          lifted.begin() + static_cast<std::ptrdiff_t>((l + 1) * nz)));
  return out;
}

Integer eval_det_exact(const BondSystem& sys, const Integer& z0, const Integer& w0) {
  const std::size_t n = sys.n;
  SquareMatrix<Integer> m(n);
  std::vector<Integer> zpow(sys.max_zexp + 1);
  zpow[0] = 1;
  for (std::size_t i = 1; i < zpow.size(); ++i) zpow[i] = zpow[i - 1] * z0;
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Integer(static_cast<long>(sys.diag[i]));
  for (const auto& t : sys.terms) {
    Integer v = zpow[t.zexp] * Integer(static_cast<long>(t.coeff));
    if (t.wexp) v *= w0;
    m(t.row, t.col) -= v;
  }
  return det_bareiss(std::move(m));
}

/// Symmetric integer points 0, 1, -1, 2, -2, ...
std::vector<Integer> sample_points(std::size_t count) {
  std::vector<Integer> xs;
  xs.reserve(count);
  for (std::size_t i = 0; xs.size() < count; ++i) {
    if (i == 0) {
      xs.emplace_back(0);
      continue;
    }
    xs.emplace_back(static_cast<long>(i));
    if (xs.size() < count) xs.emplace_back(-static_cast<long>(i));
  }
  return xs;
}

std::vector<IntPoly> solve_reference(const BondSystem& sys) {
  const auto zs = sample_points(sys.z_degree + 1);
  const auto ws = sample_points(sys.w_degree + 1);
  std::vector<IntPoly> in_z;  // F(z, w_a)
  for (const auto& w0 : ws) {
    std::vector<Integer> vals;
    vals.reserve(zs.size());
    for (const auto& z0 : zs) vals.push_back(eval_det_exact(sys, z0, w0));
    in_z.push_back(interpolate_integer(zs, vals));
  }
  std::vector<std::vector<Integer>> terms(ws.size(), std::vector<Integer>(zs.size()));
  for (std::size_t j = 0; j < zs.size(); ++j) {
    std::vector<Integer> col;
    for (const auto& p : in_z) col.push_back(p.coeff(j));
    IntPoly wp = interpolate_integer(ws, col);
    for (std::size_t l = 0; l < ws.size(); ++l) terms[l][j] = wp.coeff(l);
  }
  std::vector<IntPoly> out;
  for (auto& t : terms) out.emplace_back(std::move(t));
  return out;
}

BivariateSecular finish_bivariate(std::vector<IntPoly> terms, const MetricGraph& g, Vertex v) {
  BivariateSecular b;
  b.q = BiPoly(std::move(terms)).normalized();
  if (b.q.w_degree() != 2) throw InternalError("pendant secular polynomial must have w-degree 2");
  b.attachment = v;
  b.unit = g.unit();
  return b;
}

}  // namespace

SecularPolynomial secular_polynomial(const MetricGraph& g) {
  require_connected(g);
  auto f = solve_modular(univariate_system(g));
  return make_secular(f.front(), g.unit());
}

SecularPolynomial secular_polynomial_reference(const MetricGraph& g) {
  require_connected(g);
  auto f = solve_reference(univariate_system(g));
  return make_secular(f.front(), g.unit());
}

BivariateSecular bivariate_secular(const MetricGraph& g, Vertex attachment) {
  require_connected(g);
  return finish_bivariate(solve_modular(pendant_system(g, attachment)), g, attachment);
}

BivariateSecular bivariate_secular_reference(const MetricGraph& g, Vertex attachment) {
  require_connected(g);
  return finish_bivariate(solve_reference(pendant_system(g, attachment)), g, attachment);
}

}  // namespace qg
