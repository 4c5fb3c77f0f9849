#include "qgiso/graph.hpp"

#include <algorithm>
#include <numeric>

#include "qgiso/error.hpp"

namespace qg {

CombinatorialGraph::CombinatorialGraph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.u >= n_ || e.v >= n_) throw InvalidArgument("edge endpoint out of range");
}

std::size_t CombinatorialGraph::valence(Vertex v) const {
  if (v >= n_) throw InvalidArgument("vertex out of range");
  std::size_t d = 0;
  for (const auto& e : edges_) d += static_cast<std::size_t>(e.u == v) + static_cast<std::size_t>(e.v == v);
  return d;
}

std::vector<std::size_t> CombinatorialGraph::valences() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

bool CombinatorialGraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_;
  for (const auto& e : edges_) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool CombinatorialGraph::is_simple() const {
  std::vector<std::pair<Vertex, Vertex>> seen;
  seen.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.is_loop()) return false;
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

MetricGraph::MetricGraph(CombinatorialGraph graph, std::vector<Length> lengths, Rational unit)
    : graph_(std::move(graph)), lengths_(std::move(lengths)), unit_(std::move(unit)) {
  unit_.canonicalize();
  if (lengths_.size() != graph_.n_edges()) throw InvalidArgument("one length per edge required");
  for (Length l : lengths_)
    if (l <= 0) throw InvalidArgument("edge lengths must be positive integers");
  if (unit_ <= 0) throw InvalidArgument("length unit must be positive");
}

Length MetricGraph::integer_length() const { return std::accumulate(lengths_.begin(), lengths_.end(), Length{0}); }

Rational MetricGraph::total_length() const {
  Rational t = unit_ * Rational(static_cast<long>(integer_length()));
  t.canonicalize();
  return t;
}

MetricGraph MetricGraph::in_unit(const Rational& new_unit) const {
  Rational ratio = unit_ / new_unit;
  ratio.canonicalize();
  if (ratio.get_den() != 1 || ratio <= 0) throw InvalidArgument("new unit must divide the current unit");
  if (!ratio.get_num().fits_slong_p()) throw UnsupportedError("unit ratio too large");
  const Length k = ratio.get_num().get_si();
  std::vector<Length> l = lengths_;
  for (auto& x : l) x *= k;
  return MetricGraph(graph_, std::move(l), new_unit);
}

MetricGraph MetricGraph::reduced() const {
  Length g = 0;
  for (Length l : lengths_) g = std::gcd(g, l);
  if (g <= 1) return *this;
  std::vector<Length> l = lengths_;
  for (auto& x : l) x /= g;
  Rational u = unit_ * Rational(static_cast<long>(g));
  return MetricGraph(graph_, std::move(l), u);
}

MetricGraph MetricGraph::with_total_length(const Rational& total) const {
  if (total <= 0) throw InvalidArgument("total length must be positive");
  Rational u = total / Rational(static_cast<long>(integer_length()));
  return MetricGraph(graph_, lengths_, u);
}

MetricGraph equilateral(const CombinatorialGraph& graph, const Rational& unit) {
  if (unit <= 0) throw InvalidArgument("length unit must be positive");
  return MetricGraph(graph, std::vector<Length>(graph.n_edges(), 1), unit);
}

MetricGraph normalized_equilateral(const CombinatorialGraph& graph) {
  if (graph.n_edges() == 0) throw InvalidArgument("graph without edges has zero length");
  return equilateral(graph, Rational(1, static_cast<unsigned long>(graph.n_edges())));
}

Rational common_unit(const Rational& a, const Rational& b) {
  Integer num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::pair<MetricGraph, MetricGraph> to_common_unit(const MetricGraph& g1, const MetricGraph& g2) {
  Rational u = common_unit(g1.unit(), g2.unit());
  return {g1.in_unit(u), g2.in_unit(u)};
}

std::pair<MetricGraph, MetricGraph> common_rescale(const MetricGraph& g1, const MetricGraph& g2) {
  if (g1.total_length() != g2.total_length())
    throw IncomparableError("graphs have different total lengths (" + to_string(g1.total_length()) + " vs " +
                            to_string(g2.total_length()) + ")");
  return to_common_unit(g1, g2);
}

MetricGraph subdivide(const MetricGraph& g, std::size_t e, std::span<const Length> parts) {
  if (e >= g.n_edges()) throw InvalidArgument("edge index out of range");
  if (parts.empty()) throw InvalidArgument("subdivision needs at least one part");
  Length sum = 0;
  for (Length p : parts) {
    if (p <= 0) throw InvalidArgument("subdivision parts must be positive");
    sum += p;
  }
  if (sum != g.length(e)) throw InvalidArgument("subdivision parts must sum to the edge length");
  if (parts.size() == 1) return g;

  const Edge old = g.edges()[e];
  std::vector<Edge> edges = g.edges();
  std::vector<Length> lengths = g.lengths();
  const std::size_t n0 = g.n_vertices();
  const std::size_t k = parts.size();
  auto inner = [&](std::size_t i) { return static_cast<Vertex>(n0 + i); };
  edges[e] = Edge{old.u, inner(0)};
  lengths[e] = parts[0];
  for (std::size_t i = 1; i < k; ++i) {
    Vertex to = (i + 1 < k) ? inner(i) : old.v;
    edges.push_back(Edge{inner(i - 1), to});
    lengths.push_back(parts[i]);
  }
  return MetricGraph(CombinatorialGraph(n0 + k - 1, std::move(edges)), std::move(lengths), g.unit());
}

MetricGraph smooth(const MetricGraph& g, Vertex v) {
  if (v >= g.n_vertices()) throw InvalidArgument("vertex out of range");
  std::vector<std::size_t> incident;
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    if (ed.u == v) incident.push_back(e);
    if (ed.v == v) incident.push_back(e);
  }
  if (incident.size() != 2) throw InvalidArgument("only valence-two vertices can be smoothed");
  if (incident[0] == incident[1]) throw InvalidArgument("vertex closes a self-loop and cannot be removed");
  const std::size_t lo = std::min(incident[0], incident[1]);
  const std::size_t hi = std::max(incident[0], incident[1]);
  auto other = [&](std::size_t e) {
    const Edge& ed = g.edges()[e];
    return ed.u == v ? ed.v : ed.u;
  };
  std::vector<Edge> edges;
  std::vector<Length> lengths;
  edges.reserve(g.n_edges() - 1);
  lengths.reserve(g.n_edges() - 1);
  auto relabel = [v](Vertex x) { return x > v ? x - 1 : x; };
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    if (e == hi) continue;
    if (e == lo) {
      edges.push_back(Edge{relabel(other(lo)), relabel(other(hi))});
      lengths.push_back(g.length(lo) + g.length(hi));
    } else {
      const Edge& ed = g.edges()[e];
      edges.push_back(Edge{relabel(ed.u), relabel(ed.v)});
      lengths.push_back(g.length(e));
    }
  }
  return MetricGraph(CombinatorialGraph(g.n_vertices() - 1, std::move(edges)), std::move(lengths), g.unit());
}

MetricGraph smooth_all(const MetricGraph& g) {
  MetricGraph cur = g;
  for (;;) {
    bool changed = false;
    auto val = cur.graph().valences();
    for (Vertex v = 0; v < cur.n_vertices(); ++v) {
      if (val[v] != 2) continue;
      bool has_loop = false;
      for (const auto& e : cur.edges())
        if (e.u == v && e.v == v) has_loop = true;
      if (has_loop) continue;
      cur = smooth(cur, v);
      changed = true;
      break;
    }
    if (!changed) return cur;
  }
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("invalid rational '" + text + "'", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  q.canonicalize();
  return q;
}

}  // namespace qg
