#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgiso/poly.hpp"

namespace qg {

using Vertex = std::uint32_t;
using Length = std::int64_t;

/// Undirected edge; u == v is a self-loop. Orientation fixes bond numbering
/// (bond 2e runs u -> v, bond 2e+1 runs v -> u) but not the graph itself.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multigraph: self-loops and parallel edges allowed. Edge order is part of
/// the value (bond indexing) but irrelevant for isomorphism.
class CombinatorialGraph {
 public:
  CombinatorialGraph() = default;
  CombinatorialGraph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t n_vertices() const noexcept { return n_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Self-loops count twice.
  std::size_t valence(Vertex v) const;
  std::vector<std::size_t> valences() const;
  bool is_connected() const;
  bool is_simple() const;
  bool is_tree() const { return is_connected() && edges_.size() + 1 == n_; }

  friend bool operator==(const CombinatorialGraph&, const CombinatorialGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Graph with positive integer edge lengths measured in a rational unit.
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(CombinatorialGraph graph, std::vector<Length> lengths, Rational unit);

  const CombinatorialGraph& graph() const noexcept { return graph_; }
  std::size_t n_vertices() const noexcept { return graph_.n_vertices(); }
  std::size_t n_edges() const noexcept { return graph_.n_edges(); }
  const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
  const std::vector<Length>& lengths() const noexcept { return lengths_; }
  Length length(std::size_t e) const { return lengths_.at(e); }
  const Rational& unit() const noexcept { return unit_; }

  /// Sum of the integer lengths.
  Length integer_length() const;
  /// unit * integer_length().
  Rational total_length() const;

  /// Same graph measured in a finer unit; new_unit must divide unit().
  MetricGraph in_unit(const Rational& new_unit) const;
  /// Divides all integer lengths by their gcd (coarsest exact unit).
  MetricGraph reduced() const;
  /// Rescales the unit so the total length equals `total`; integer lengths unchanged.
  MetricGraph with_total_length(const Rational& total) const;

  friend bool operator==(const MetricGraph&, const MetricGraph&) = default;

 private:
  CombinatorialGraph graph_;
  std::vector<Length> lengths_;
  Rational unit_ = 1;
};

/// Every edge gets integer length 1 measured in `unit`.
MetricGraph equilateral(const CombinatorialGraph& graph, const Rational& unit);
/// equilateral(graph, 1/E): total length one.
MetricGraph normalized_equilateral(const CombinatorialGraph& graph);

/// Largest rational dividing both a and b.
Rational common_unit(const Rational& a, const Rational& b);
/// Both graphs re-expressed in their common unit; totals must agree.
std::pair<MetricGraph, MetricGraph> common_rescale(const MetricGraph& g1, const MetricGraph& g2);
/// Both graphs re-expressed in their common unit; no length requirement.
std::pair<MetricGraph, MetricGraph> to_common_unit(const MetricGraph& g1, const MetricGraph& g2);

/// Replaces edge `e` by a path through new valence-two vertices
/// (appended after the existing vertices). The first part keeps index e,
/// the remaining parts are appended to the edge list.
MetricGraph subdivide(const MetricGraph& g, std::size_t e, std::span<const Length> parts);
/// Removes a valence-two vertex whose two edge-ends lie on distinct edges,
/// merging them. The merged edge keeps the smaller index; vertex ids above
/// the removed one shift down by one.
MetricGraph smooth(const MetricGraph& g, Vertex v);
/// Smooths every eligible valence-two vertex (canonical metric shape).
MetricGraph smooth_all(const MetricGraph& g);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace qg
