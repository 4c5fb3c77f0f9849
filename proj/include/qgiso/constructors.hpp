#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgiso/graph.hpp"
#include "qgiso/poly.hpp"

namespace qg {

/// A named graph family with its integer parameters. Text form, e.g.
/// `chain-of-loops:1,1,2`, `pumpkin-star:4+3+3@1`, `complete:4`,
/// `edges:0-1:2,0-0:4,0-2:2`, optionally followed by `;unit=1/8`.
struct FamilySpec {
  enum class Kind {
    path,            // path:L            one edge of length L
    loop,            // loop:L            one self-loop
    star,            // star:l1,l2,...    leaves of the given lengths
    complete,        // complete:V        unit edges
    flower,          // flower:S@l        S self-loops of length l at one vertex
    pumpkin,         // pumpkin:d@l       d parallel edges of length l
    pumpkin_chain,   // pumpkin-chain:d1@l1,d2@l2,...
    chain_of_loops,  // chain-of-loops:L1,L2,...   loop i has circumference Li
    ring_of_loops,   // ring-of-loops:L1,L2,...
    tadpole,         // tadpole:loop,tail
    pumpkin_star,    // pumpkin-star:d1+d2+...@l  or  @l1+l2+...
    pumpkin_pair,    // pumpkin-pair:k1,k2@l
    edges,           // edges:u-v:len,...  explicit multigraph
  };
  Kind kind = Kind::path;
  /// Lengths, counts or degrees, depending on the kind.
  std::vector<Length> a;
  /// Per-item edge lengths where the kind has them.
  std::vector<Length> b;
  /// Explicit edges for Kind::edges.
  std::vector<Edge> edge_list;
  std::optional<Rational> unit;
};

FamilySpec parse_family(const std::string& text);
std::string to_string(const FamilySpec& spec);
/// True if the text looks like a family spec rather than graph6 or a file reference.
bool looks_like_family(const std::string& text);

MetricGraph build(const FamilySpec& spec);

/// Identifies vertex u of h with vertex v of g. Vertices of h keep their
/// ids, g's follow in order; both are first expressed in a common unit.
MetricGraph graft(const MetricGraph& h, Vertex u, const MetricGraph& g, Vertex v);
/// Vertex id of g's vertex x inside graft(h, u, g, v).
Vertex grafted_id(std::size_t n_host, Vertex u, Vertex v, Vertex x);
/// Two copies of g glued at every vertex: each edge becomes a parallel pair.
MetricGraph double_graph(const MetricGraph& g);
/// Every edge {x, y} of g is replaced by a copy of r with a -> x and b -> y.
/// g must be equilateral; r keeps its own lengths and unit.
MetricGraph replace_edges(const MetricGraph& g, const MetricGraph& r, Vertex a, Vertex b);

struct Pumpkin {
  std::size_t degree;
  Length length;
};
MetricGraph pumpkin_chain(const std::vector<Pumpkin>& chain, const Rational& unit = 1);
/// Chain reordered by `perm` (new position i holds old pumpkin perm[i]).
/// Only permutations inside runs of equal degree are allowed.
MetricGraph permute_pumpkin_chain(const std::vector<Pumpkin>& chain, const std::vector<std::size_t>& perm,
                                  const Rational& unit = 1);

/// Closed-form secular polynomial check for a family.
struct FormulaCheck {
  std::string formula;
  IntPoly computed;
  IntPoly expected;
  /// Proportional up to a constant and a power of z.
  bool matches = false;
};
/// Throws UnsupportedError for families without a closed form.
FormulaCheck validate_formula(const FamilySpec& spec);
/// secular(double(g)) against secular(g) * prod_e (z^{2 L_e} - 1).
FormulaCheck validate_doubling(const MetricGraph& g);

/// All pendant-tree decorations of the n-cycle with at most m vertices, up to
/// isomorphism, sorted by (vertex count, canonical graph6).
struct DecoratedLoops {
  std::vector<CombinatorialGraph> graphs;
  /// Set when `cap` stopped the enumeration early; `graphs` is then a prefix
  /// of the complete enumeration's levels.
  bool truncated = false;
};
DecoratedLoops decorated_loops(std::size_t n, std::size_t m, std::size_t cap = 5'000'000);

/// graph6 of the canonical relabelling; a total order on isomorphism classes.
std::string canonical_graph6(const CombinatorialGraph& g);

}  // namespace qg
