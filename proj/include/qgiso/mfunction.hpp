#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qgiso/graph.hpp"
#include "qgiso/poly.hpp"

namespace qg {

/// w-primitive part of the pendant secular polynomial Q(z, w) at a vertex.
/// Two vertices have the same M-function iff their signatures agree.
struct MSignature {
  BiPoly q;
  /// gcd over Z[z] of the w-coefficients of Q, removed from q: eigenfunctions
  /// vanishing at the vertex, invisible to the M-function.
  IntPoly discarded;
  Vertex vertex = 0;
  Rational unit = 1;
};

MSignature m_signature(const MetricGraph& g, Vertex v);
/// Same signature expressed in a finer unit: Q(z^k, w) with k = unit / new_unit.
MSignature rescaled(const MSignature& s, const Rational& new_unit);
/// Signatures must share a unit (IncomparableError otherwise).
bool same_signature(const MSignature& a, const MSignature& b);
bool same_m(const MetricGraph& g1, Vertex v1, const MetricGraph& g2, Vertex v2);

/// M(k) = i k N(z) / D(z), z = e^{i k unit}; gcd(N, D) = 1, content of
/// (N, D) one, D with positive leading coefficient.
struct MRational {
  IntPoly num;
  IntPoly den;
  Vertex vertex = 0;
  Rational unit = 1;
  friend bool operator==(const MRational& a, const MRational& b) {
    return a.num == b.num && a.den == b.den && a.unit == b.unit;
  }
};

/// Dirichlet-to-Neumann map at v, solved exactly over Z[z] from the vertex
/// conditions (independent of the scattering-matrix route).
MRational m_rational(const MetricGraph& g, Vertex v);
/// M-function of the union glued at the two boundary vertices (same unit).
MRational operator+(const MRational& a, const MRational& b);
MRational reduce_fraction(IntPoly num, IntPoly den, Vertex v, const Rational& unit);

using VertexRef = std::pair<std::size_t, Vertex>;

/// Classes of (graph index, vertex) with identical M-functions across all
/// graphs (common unit required); singletons dropped. Each class is
/// cross-checked against m_rational when `cross_check` is set.
std::vector<std::vector<VertexRef>> hot_classes(const std::vector<MetricGraph>& graphs, bool cross_check = true);

}  // namespace qg
