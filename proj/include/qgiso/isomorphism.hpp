#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qgiso/graph.hpp"

namespace qg {

/// Isomorphism-invariant encoding of an edge-labelled multigraph.
/// Two graphs are isomorphic (respecting labels, multiplicities and
/// self-loops) iff their canonical forms compare equal.
struct CanonicalForm {
  std::size_t n_vertices = 0;
  /// Distinct sorted label multisets, ascending; id k refers to entry k-1.
  std::vector<std::vector<Length>> label_sets;
  /// Upper triangle (diagonal included) of the relabelled label-id matrix.
  std::vector<std::uint32_t> matrix;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  std::size_t hash() const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] = canonical index of vertex v.
  std::vector<Vertex> position;
};

/// Every edge carries label 1.
CanonicalLabeling canonical_labeling(const CombinatorialGraph& g);
/// Edges carry their integer lengths (the unit is ignored).
CanonicalLabeling canonical_labeling(const MetricGraph& g);

CanonicalForm canonical_form(const CombinatorialGraph& g);
CanonicalForm canonical_form(const MetricGraph& g);

/// Vertices renumbered by a canonical labeling (edges sorted).
CombinatorialGraph canonical_relabel(const CombinatorialGraph& g);

/// Multigraph isomorphism, self-loops respected.
bool is_isomorphic(const CombinatorialGraph& g1, const CombinatorialGraph& g2);

/// Equal as metric spaces: same total length and isomorphic after
/// smoothing all valence-two vertices, measured in a common unit.
bool is_isometric(const MetricGraph& g1, const MetricGraph& g2);

/// Orbits of the automorphism group on vertices (each orbit sorted, orbits
/// ordered by smallest member).
std::vector<std::vector<Vertex>> vertex_orbits(const MetricGraph& g);

}  // namespace qg

template <>
struct std::hash<qg::CanonicalForm> {
  std::size_t operator()(const qg::CanonicalForm& f) const noexcept { return f.hash(); }
};
