#include "qgiso/mfunction.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

#include "qgiso/error.hpp"
#include "qgiso/secular.hpp"

namespace qg {

MSignature m_signature(const MetricGraph& g, Vertex v) {
  auto b = bivariate_secular(g, v);
  MSignature s;
  s.discarded = b.q.z_content().primitive();
  s.q = b.q.divexact(s.discarded).normalized();
  s.vertex = v;
  s.unit = g.unit();
  return s;
}

MSignature rescaled(const MSignature& s, const Rational& new_unit) {
  Rational ratio = s.unit / new_unit;
  ratio.canonicalize();
  if (ratio.get_den() != 1 || ratio <= 0) throw InvalidArgument("new unit must divide the old one");
  const auto k = ratio.get_num().get_ui();
  std::vector<IntPoly> t;
  for (const auto& c : s.q.terms()) t.push_back(c.inflate(k));
  MSignature r = s;
  r.q = BiPoly(std::move(t));
  r.discarded = s.discarded.inflate(k);
  r.unit = new_unit;
  return r;
}

bool same_signature(const MSignature& a, const MSignature& b) {
  if (a.unit != b.unit) throw IncomparableError("signatures use different units " + to_string(a.unit) + " and " +
                                                to_string(b.unit));
  return a.q == b.q;
}

bool same_m(const MetricGraph& g1, Vertex v1, const MetricGraph& g2, Vertex v2) {
  return same_signature(m_signature(g1, v1), m_signature(g2, v2));
}

// ------------------------------------------------------------ rational oracle

namespace {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

/// Fraction-free (Bareiss) determinant over Z[z].
IntPoly det_bareiss_poly(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  IntPoly prev = IntPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return IntPoly{};
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntPoly lcm(const IntPoly& a, const IntPoly& b) { return divexact(a * b, gcd(a, b)); }

}  // namespace

MRational reduce_fraction(IntPoly num, IntPoly den, Vertex v, const Rational& unit) {
  if (den.is_zero()) throw InternalError("M-function denominator vanishes identically");
  MRational r;
  r.vertex = v;
  r.unit = unit;
  if (num.is_zero()) {
    r.num = IntPoly{};
    r.den = IntPoly::constant(1);
    return r;
  }
  IntPoly g = gcd(num, den);
  num = divexact(num, g);
  den = divexact(den, g);
  Integer c = gcd(num.content(), den.content());
  if (den.leading() < 0) c = -c;
  r.num = num.divexact(c);
  r.den = den.divexact(c);
  return r;
}

MRational m_rational(const MetricGraph& g, Vertex v) {
  if (!g.graph().is_connected()) throw InvalidArgument("M-function requires a connected graph");
  if (v >= g.n_vertices()) throw InvalidArgument("boundary vertex out of range");
  const std::size_t n = g.n_vertices();
  // Row a of K holds Delta * (outward derivative sum at a) / (i k) as a
  // linear form in the vertex values; Delta = lcm(z^{2L} - 1).
  IntPoly delta = IntPoly::constant(1);
  for (Length l : g.lengths()) delta = lcm(delta, IntPoly::power_minus_one(static_cast<std::size_t>(2 * l)));
  PolyMatrix K(n, std::vector<IntPoly>(n));
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    const auto L = static_cast<std::size_t>(g.length(e));
    const Edge& ed = g.edges()[e];
    const IntPoly scale = divexact(delta, IntPoly::power_minus_one(2 * L));
    if (ed.is_loop()) {
      // -2 (z^L - 1)^2 / (z^{2L} - 1)
      K[ed.u][ed.u] -= scale * pow(IntPoly::power_minus_one(L), 2) * Integer(2);
      continue;
    }
    // (2 u_b z^L - u_a (z^{2L} + 1)) / (z^{2L} - 1), and symmetrically
    const IntPoly cross = scale * IntPoly::monomial(2, L);
    const IntPoly self = scale * IntPoly::power_plus_one(2 * L);
    K[ed.u][ed.v] += cross;
    K[ed.v][ed.u] += cross;
    K[ed.u][ed.u] -= self;
    K[ed.v][ed.v] -= self;
  }
  // Delta * S_v = det K / det K_RR (Schur complement of the interior block).
  PolyMatrix interior;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == v) continue;
    std::vector<IntPoly> row;
    for (std::size_t b = 0; b < n; ++b)
      if (b != v) row.push_back(K[a][b]);
    interior.push_back(std::move(row));
  }
  IntPoly inner = det_bareiss_poly(std::move(interior));
  if (inner.is_zero()) throw InternalError("interior vertex system is singular");
  IntPoly full = det_bareiss_poly(std::move(K));
  return reduce_fraction(std::move(full), delta * inner, v, g.unit());
}

MRational operator+(const MRational& a, const MRational& b) {
  if (a.unit != b.unit) throw IncomparableError("M-functions use different units");
  return reduce_fraction(a.num * b.den + b.num * a.den, a.den * b.den, a.vertex, a.unit);
}

// ------------------------------------------------------------ hot vertices

namespace {

struct BiPolyLess {
  bool operator()(const BiPoly& a, const BiPoly& b) const {
    const auto& x = a.terms();
    const auto& y = b.terms();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const IntPoly& p, const IntPoly& q) { return p.coeffs() < q.coeffs(); });
  }
};

}  // namespace

std::vector<std::vector<VertexRef>> hot_classes(const std::vector<MetricGraph>& graphs, bool cross_check) {
  for (const auto& g : graphs)
    if (g.unit() != graphs.front().unit()) throw IncomparableError("hot vertex classes need a common unit");
  std::vector<VertexRef> refs;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (Vertex v = 0; v < graphs[i].n_vertices(); ++v) refs.emplace_back(i, v);
  std::vector<BiPoly> sig(refs.size());
  const auto total = static_cast<std::int64_t>(refs.size());
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
  for (std::int64_t i = 0; i < total; ++i) {
    const auto& [gi, v] = refs[static_cast<std::size_t>(i)];
    sig[static_cast<std::size_t>(i)] = m_signature(graphs[gi], v).q;
  }
  // refs are already in (graph, vertex) order, so classes come out sorted.
  std::map<BiPoly, std::vector<VertexRef>, BiPolyLess> groups;
  for (std::size_t i = 0; i < refs.size(); ++i) groups[sig[i]].push_back(refs[i]);
  std::vector<std::vector<VertexRef>> out;
  for (auto& [q, members] : groups)
    if (members.size() > 1) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  if (cross_check)
    for (const auto& cls : out) {
      const auto first = m_rational(graphs[cls.front().first], cls.front().second);
      for (std::size_t i = 1; i < cls.size(); ++i)
        if (!(m_rational(graphs[cls[i].first], cls[i].second) == first))
          throw InternalError("signature and rational M-function disagree");
    }
  return out;
}

}  // namespace qg
