#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qgiso/graph.hpp"
#include "qgiso/poly.hpp"

namespace qgt {

using qg::CombinatorialGraph;
using qg::Edge;
using qg::Integer;
using qg::IntPoly;
using qg::Length;
using qg::MetricGraph;
using qg::Rational;

inline MetricGraph metric(std::size_t n, std::vector<Edge> edges, std::vector<Length> lengths, Rational unit = 1) {
  return MetricGraph(CombinatorialGraph(n, std::move(edges)), std::move(lengths), unit);
}

/// Connected multigraph: random spanning tree plus extra edges, loops and
/// parallels included; lengths in [1, max_len].
inline MetricGraph random_metric_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra, Length max_len) {
  std::vector<Edge> edges;
  for (qg::Vertex v = 1; v < n; ++v) edges.push_back(Edge{static_cast<qg::Vertex>(rng() % v), v});
  for (std::size_t i = 0; i < extra; ++i)
    edges.push_back(Edge{static_cast<qg::Vertex>(rng() % n), static_cast<qg::Vertex>(rng() % n)});
  if (edges.empty()) edges.push_back(Edge{0, 0});
  std::vector<Length> lengths(edges.size());
  for (auto& l : lengths) l = 1 + static_cast<Length>(rng() % max_len);
  return metric(n, std::move(edges), std::move(lengths));
}

/// Exact determinant over Q by plain Gaussian elimination (independent of the library).
inline Rational det_q(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// det(I - S_v D(z0)) straight from the vertex conditions: a wave arriving at
/// v along one edge-end leaves along every edge-end with 2/d(v), minus one for
/// the end it came in on.
inline Rational secular_by_hand(const MetricGraph& g, const Rational& z0) {
  const std::size_t E = g.n_edges();
  std::vector<std::size_t> d(g.n_vertices(), 0);
  for (const auto& e : g.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  // directed bond b: edge b/2, from (b even ? u : v)
  auto from = [&](std::size_t b) { return b % 2 ? g.edges()[b / 2].v : g.edges()[b / 2].u; };
  auto to = [&](std::size_t b) { return b % 2 ? g.edges()[b / 2].u : g.edges()[b / 2].v; };
  std::vector<std::vector<Rational>> m(2 * E, std::vector<Rational>(2 * E, Rational(0)));
  for (std::size_t out = 0; out < 2 * E; ++out) {
    m[out][out] += 1;
    for (std::size_t in = 0; in < 2 * E; ++in) {
      if (to(in) != from(out)) continue;
      Rational s(2, static_cast<long>(d[from(out)]));
      s.canonicalize();
      if ((in ^ 1U) == out) s -= 1;
      Rational zl = 1;
      for (Length i = 0; i < g.length(in / 2); ++i) zl *= z0;
      m[out][in] -= s * zl;
    }
  }
  return det_q(std::move(m));
}

/// Checks a == c * z^s * b for some nonzero rational c and integer shift s.
inline bool proportional_up_to_monomial(const IntPoly& a, const IntPoly& b) {
  return qg::proportional(a.without_monomial_factor(), b.without_monomial_factor());
}

}  // namespace qgt
