#include "qgiso/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qgiso/error.hpp"
#include "qgiso/graph6.hpp"
#include "qgiso/isomorphism.hpp"
#include "qgiso/secular.hpp"

namespace qg {

// ------------------------------------------------------------ text form

namespace {

using Kind = FamilySpec::Kind;

const std::vector<std::pair<std::string, Kind>>& kind_names() {
  static const std::vector<std::pair<std::string, Kind>> names = {
      {"path", Kind::path},
      {"loop", Kind::loop},
      {"star", Kind::star},
      {"complete", Kind::complete},
      {"flower", Kind::flower},
      {"pumpkin", Kind::pumpkin},
      {"pumpkin-chain", Kind::pumpkin_chain},
      {"chain-of-loops", Kind::chain_of_loops},
      {"ring-of-loops", Kind::ring_of_loops},
      {"tadpole", Kind::tadpole},
      {"pumpkin-star", Kind::pumpkin_star},
      {"pumpkin-pair", Kind::pumpkin_pair},
      {"edges", Kind::edges},
  };
  return names;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Length parse_int(const std::string& s, const std::string& context) {
  Length v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("expected an integer in '" + context + "', got '" + s + "'", 0);
  return v;
}

std::vector<Length> parse_list(const std::string& s, char sep, const std::string& context) {
  std::vector<Length> out;
  for (const auto& part : split(s, sep)) out.push_back(parse_int(part, context));
  return out;
}

std::string join(const std::vector<Length>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(sep);
    s += std::to_string(v[i]);
  }
  return s;
}

void require_positive(const std::vector<Length>& v, const std::string& what) {
  if (v.empty()) throw InvalidArgument(what + ": empty parameter list");
  for (Length x : v)
    if (x <= 0) throw InvalidArgument(what + ": parameters must be positive");
}

void require_count(const std::vector<Length>& v, std::size_t n, const std::string& what) {
  if (v.size() != n) throw InvalidArgument(what + ": expected " + std::to_string(n) + " parameter(s)");
}

std::string kind_name(Kind k) {
  for (const auto& [name, kind] : kind_names())
    if (kind == k) return name;
  return "?";
}

}  // namespace

bool looks_like_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  const std::string head = text.substr(0, colon);
  for (const auto& [name, kind] : kind_names())
    if (name == head) return true;
  return false;
}

FamilySpec parse_family(const std::string& text) {
  FamilySpec spec;
  std::string body = text;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    const std::string opt = body.substr(semi + 1);
    body = body.substr(0, semi);
    if (opt.rfind("unit=", 0) != 0) throw ParseError("unknown option '" + opt + "' in '" + text + "'", semi + 1);
    spec.unit = parse_rational(opt.substr(5));
    if (*spec.unit <= 0) throw InvalidArgument("unit must be positive");
  }
  const auto colon = body.find(':');
  if (colon == std::string::npos) throw ParseError("family spec needs 'name:parameters': '" + text + "'", 0);
  const std::string head = body.substr(0, colon);
  const std::string args = body.substr(colon + 1);
  bool known = false;
  for (const auto& [name, kind] : kind_names())
    if (name == head) {
      spec.kind = kind;
      known = true;
    }
  if (!known) throw ParseError("unknown family '" + head + "'", 0);

  auto at_split = [&](const std::string& s) -> std::pair<std::string, std::string> {
    auto at = s.find('@');
    if (at == std::string::npos) return {s, "1"};
    return {s.substr(0, at), s.substr(at + 1)};
  };

  switch (spec.kind) {
    case Kind::path:
    case Kind::loop:
    case Kind::complete:
      spec.a = parse_list(args, ',', text);
      require_count(spec.a, 1, head);
      break;
    case Kind::star:
    case Kind::chain_of_loops:
    case Kind::ring_of_loops:
      spec.a = parse_list(args, ',', text);
      break;
    case Kind::tadpole:
      spec.a = parse_list(args, ',', text);
      require_count(spec.a, 2, head);
      break;
    case Kind::flower:
    case Kind::pumpkin: {
      auto [n, l] = at_split(args);
      spec.a = {parse_int(n, text)};
      spec.b = {parse_int(l, text)};
      break;
    }
    case Kind::pumpkin_pair: {
      auto [n, l] = at_split(args);
      spec.a = parse_list(n, ',', text);
      require_count(spec.a, 2, head);
      spec.b = {parse_int(l, text)};
      break;
    }
    case Kind::pumpkin_star: {
      auto [n, l] = at_split(args);
      spec.a = parse_list(n, '+', text);
      spec.b = parse_list(l, '+', text);
      if (spec.b.size() != 1 && spec.b.size() != spec.a.size())
        throw InvalidArgument("pumpkin-star: give one length or one per leaf");
      break;
    }
    case Kind::pumpkin_chain:
      for (const auto& item : split(args, ',')) {
        auto [d, l] = at_split(item);
        spec.a.push_back(parse_int(d, text));
        spec.b.push_back(parse_int(l, text));
      }
      break;
    case Kind::edges:
      for (const auto& item : split(args, ',')) {
        auto parts = split(item, ':');
        if (parts.size() > 2) throw ParseError("edge '" + item + "' should be u-v or u-v:length", 0);
        auto ends = split(parts[0], '-');
        if (ends.size() != 2) throw ParseError("edge '" + item + "' should be u-v or u-v:length", 0);
        const Length u = parse_int(ends[0], text), v = parse_int(ends[1], text);
        if (u < 0 || v < 0) throw InvalidArgument("vertex ids must be non-negative");
        spec.edge_list.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
        spec.a.push_back(parts.size() == 2 ? parse_int(parts[1], text) : 1);
      }
      break;
  }
  if (spec.kind != Kind::edges) {
    require_positive(spec.a, head);
    if (!spec.b.empty()) require_positive(spec.b, head);
  } else {
    require_positive(spec.a, head);
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string s = kind_name(spec.kind) + ":";
  switch (spec.kind) {
    case Kind::path:
    case Kind::loop:
    case Kind::complete:
    case Kind::star:
    case Kind::chain_of_loops:
    case Kind::ring_of_loops:
    case Kind::tadpole:
      s += join(spec.a, ',');
      break;
    case Kind::flower:
    case Kind::pumpkin:
      s += std::to_string(spec.a.at(0)) + "@" + std::to_string(spec.b.at(0));
      break;
    case Kind::pumpkin_pair:
      s += join(spec.a, ',') + "@" + std::to_string(spec.b.at(0));
      break;
    case Kind::pumpkin_star:
      s += join(spec.a, '+') + "@" + join(spec.b, '+');
      break;
    case Kind::pumpkin_chain:
      for (std::size_t i = 0; i < spec.a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(spec.a[i]) + "@" + std::to_string(spec.b[i]);
      }
      break;
    case Kind::edges:
      for (std::size_t i = 0; i < spec.edge_list.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(spec.edge_list[i].u) + "-" + std::to_string(spec.edge_list[i].v) + ":" +
             std::to_string(spec.a[i]);
      }
      break;
  }
  if (spec.unit) s += ";unit=" + to_string(*spec.unit);
  return s;
}

// ------------------------------------------------------------ builders

MetricGraph pumpkin_chain(const std::vector<Pumpkin>& chain, const Rational& unit) {
  if (chain.empty()) throw InvalidArgument("pumpkin chain needs at least one pumpkin");
  std::vector<Edge> edges;
  std::vector<Length> lengths;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].degree == 0 || chain[i].length <= 0) throw InvalidArgument("pumpkins need positive degree and length");
    for (std::size_t j = 0; j < chain[i].degree; ++j) {
      edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
      lengths.push_back(chain[i].length);
    }
  }
  return MetricGraph(CombinatorialGraph(chain.size() + 1, std::move(edges)), std::move(lengths), unit);
}

MetricGraph permute_pumpkin_chain(const std::vector<Pumpkin>& chain, const std::vector<std::size_t>& perm,
                                  const Rational& unit) {
  if (perm.size() != chain.size()) throw InvalidArgument("permutation size does not match the chain");
  std::vector<std::size_t> run(chain.size());
  for (std::size_t i = 1; i < chain.size(); ++i)
    run[i] = run[i - 1] + (chain[i].degree != chain[i - 1].degree ? 1 : 0);
  std::vector<bool> seen(chain.size(), false);
  std::vector<Pumpkin> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::size_t j = perm[i];
    if (j >= chain.size() || seen[j]) throw InvalidArgument("not a permutation");
    seen[j] = true;
    if (run[j] != run[i]) throw InvalidArgument("permutation moves a pumpkin out of its equal-degree run");
    out.push_back(chain[j]);
  }
  return pumpkin_chain(out, unit);
}

namespace {

/// Loops of circumference L_i as parallel pairs of length L_i in half units.
MetricGraph loops_chain(const std::vector<Length>& circumferences, const Rational& unit) {
  std::vector<Pumpkin> p;
  for (Length l : circumferences) p.push_back({2, l});
  return pumpkin_chain(p, unit / 2);
}

MetricGraph loops_ring(const std::vector<Length>& circumferences, const Rational& unit) {
  const std::size_t m = circumferences.size();
  std::vector<Edge> edges;
  std::vector<Length> lengths;
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m)});
      lengths.push_back(circumferences[i]);
    }
  return MetricGraph(CombinatorialGraph(m, std::move(edges)), std::move(lengths), unit / 2);
}

/// The graph exactly as the family describes it, before unit reduction.
MetricGraph build_raw(const FamilySpec& s) {
  const Rational unit = s.unit.value_or(Rational(1));
  std::vector<Edge> edges;
  std::vector<Length> lengths;
  auto make = [&](std::size_t n) { return MetricGraph(CombinatorialGraph(n, edges), lengths, unit); };
  switch (s.kind) {
    case Kind::path:
      edges = {{0, 1}};
      lengths = {s.a[0]};
      return make(2);
    case Kind::loop:
      edges = {{0, 0}};
      lengths = {s.a[0]};
      return make(1);
    case Kind::star:
      for (std::size_t i = 0; i < s.a.size(); ++i) {
        edges.push_back({0, static_cast<Vertex>(i + 1)});
        lengths.push_back(s.a[i]);
      }
      return make(s.a.size() + 1);
    case Kind::complete: {
      const auto n = static_cast<std::size_t>(s.a[0]);
      if (n < 2) throw InvalidArgument("complete graph needs at least two vertices");
      if (n > 62) throw UnsupportedError("complete graph too large");
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
          edges.push_back({i, j});
          lengths.push_back(1);
        }
      return make(n);
    }
    case Kind::flower:
      for (Length i = 0; i < s.a[0]; ++i) {
        edges.push_back({0, 0});
        lengths.push_back(s.b[0]);
      }
      return make(1);
    case Kind::pumpkin:
      return pumpkin_chain({{static_cast<std::size_t>(s.a[0]), s.b[0]}}, unit);
    case Kind::pumpkin_chain: {
      std::vector<Pumpkin> p;
      for (std::size_t i = 0; i < s.a.size(); ++i) p.push_back({static_cast<std::size_t>(s.a[i]), s.b[i]});
      return pumpkin_chain(p, unit);
    }
    case Kind::chain_of_loops:
      return loops_chain(s.a, unit);
    case Kind::ring_of_loops:
      return loops_ring(s.a, unit);
    case Kind::tadpole:
      edges = {{0, 0}, {0, 1}};
      lengths = {s.a[0], s.a[1]};
      return make(2);
    case Kind::pumpkin_star:
      for (std::size_t i = 0; i < s.a.size(); ++i)
        for (Length j = 0; j < s.a[i]; ++j) {
          edges.push_back({0, static_cast<Vertex>(i + 1)});
          lengths.push_back(s.b.size() == 1 ? s.b[0] : s.b[i]);
        }
      return make(s.a.size() + 1);
    case Kind::pumpkin_pair:
      return pumpkin_chain({{static_cast<std::size_t>(s.a[0]), s.b[0]}, {static_cast<std::size_t>(s.a[1]), s.b[0]}},
                           unit);
    case Kind::edges: {
      Vertex n = 0;
      for (const auto& e : s.edge_list) n = std::max({n, e.u + 1, e.v + 1});
      edges = s.edge_list;
      lengths = s.a;
      return make(n);
    }
  }
  throw InternalError("unhandled family");
}

}  // namespace

MetricGraph build(const FamilySpec& spec) {
  MetricGraph g = build_raw(spec);
  if (spec.kind == Kind::chain_of_loops || spec.kind == Kind::ring_of_loops) return g.reduced();
  return g;
}

Vertex grafted_id(std::size_t n_host, Vertex u, Vertex v, Vertex x) {
  if (x == v) return u;
  return static_cast<Vertex>(n_host + (x > v ? x - 1 : x));
}

MetricGraph graft(const MetricGraph& h, Vertex u, const MetricGraph& g, Vertex v) {
  if (u >= h.n_vertices() || v >= g.n_vertices()) throw InvalidArgument("graft vertex out of range");
  auto [a, b] = to_common_unit(h, g);
  std::vector<Edge> edges = a.edges();
  std::vector<Length> lengths = a.lengths();
  for (std::size_t e = 0; e < b.n_edges(); ++e) {
    const Edge& x = b.edges()[e];
    edges.push_back(Edge{grafted_id(a.n_vertices(), u, v, x.u), grafted_id(a.n_vertices(), u, v, x.v)});
    lengths.push_back(b.length(e));
  }
  return MetricGraph(CombinatorialGraph(a.n_vertices() + b.n_vertices() - 1, std::move(edges)), std::move(lengths),
                     a.unit());
}

MetricGraph double_graph(const MetricGraph& g) {
  std::vector<Edge> edges;
  std::vector<Length> lengths;
  for (std::size_t e = 0; e < g.n_edges(); ++e)
    for (int c = 0; c < 2; ++c) {
      edges.push_back(g.edges()[e]);
      lengths.push_back(g.length(e));
    }
  return MetricGraph(CombinatorialGraph(g.n_vertices(), std::move(edges)), std::move(lengths), g.unit());
}

MetricGraph replace_edges(const MetricGraph& g, const MetricGraph& r, Vertex a, Vertex b) {
  if (a >= r.n_vertices() || b >= r.n_vertices() || a == b) throw InvalidArgument("replacement poles must be distinct vertices");
  for (Length l : g.lengths())
    if (l != g.lengths().front()) throw InvalidArgument("edge replacement needs an equilateral host");
  const std::size_t inner = r.n_vertices() - 2;
  std::vector<Edge> edges;
  std::vector<Length> lengths;
  std::size_t next = g.n_vertices();
  for (const auto& e : g.edges()) {
    std::vector<Vertex> map(r.n_vertices());
    for (Vertex x = 0; x < r.n_vertices(); ++x) {
      if (x == a) map[x] = e.u;
      else if (x == b) map[x] = e.v;
      else map[x] = static_cast<Vertex>(next++);
    }
    for (std::size_t k = 0; k < r.n_edges(); ++k) {
      edges.push_back(Edge{map[r.edges()[k].u], map[r.edges()[k].v]});
      lengths.push_back(r.length(k));
    }
  }
  const std::size_t n = g.n_vertices() + inner * g.n_edges();
  return MetricGraph(CombinatorialGraph(n, std::move(edges)), std::move(lengths), r.unit());
}

// ------------------------------------------------------------ closed forms

namespace {

IntPoly zm1(std::size_t n) { return IntPoly::power_minus_one(n); }
IntPoly zp1(std::size_t n) { return IntPoly::power_plus_one(n); }

std::size_t sz(Length x) { return static_cast<std::size_t>(x); }

bool matches(const IntPoly& a, const IntPoly& b) {
  return proportional(a.without_monomial_factor(), b.without_monomial_factor());
}

}  // namespace

FormulaCheck validate_formula(const FamilySpec& spec) {
  FormulaCheck c;
  const MetricGraph g = build_raw(spec);
  const auto& a = spec.a;
  switch (spec.kind) {
    case Kind::complete: {
      const auto v = static_cast<unsigned>(a[0]);
      const unsigned f = v - 1, p = (v * v - 3 * v) / 2;
      c.formula = "complete graph";
      c.expected = pow(IntPoly{static_cast<long>(f), 2, static_cast<long>(f)}, f) * pow(zm1(1), p + 2) *
                   pow(zp1(1), p);
      break;
    }
    case Kind::chain_of_loops: {
      // half units: e^{ik L} = z^{2L}
      const Length total = std::accumulate(a.begin(), a.end(), Length{0});
      c.formula = "chain of loops";
      c.expected = zm1(2 * sz(total));
      for (Length l : a) c.expected = c.expected * zm1(2 * sz(l));
      break;
    }
    case Kind::ring_of_loops: {
      const Length total = std::accumulate(a.begin(), a.end(), Length{0});
      c.formula = "ring of loops";
      c.expected = pow(zm1(sz(total)), 2);
      for (Length l : a) c.expected = c.expected * zm1(2 * sz(l));
      break;
    }
    case Kind::pumpkin_pair: {
      const auto k = static_cast<unsigned>(a[0] + a[1]);
      const auto l = sz(spec.b[0]);
      c.formula = "connected pumpkin pair";
      c.expected = pow(zm1(2 * l), k - 1) * zp1(2 * l);
      break;
    }
    case Kind::pumpkin_star:
    case Kind::pumpkin:
    case Kind::star: {
      std::vector<Length> lens = spec.kind == Kind::star ? a : spec.b;
      for (Length l : lens)
        if (l != lens.front()) throw UnsupportedError("no closed form for leaves of different lengths");
      unsigned s = 0, k = 0;
      if (spec.kind == Kind::pumpkin_star) {
        s = static_cast<unsigned>(a.size());
        k = static_cast<unsigned>(std::accumulate(a.begin(), a.end(), Length{0}));
      } else if (spec.kind == Kind::pumpkin) {
        s = 1;
        k = static_cast<unsigned>(a[0]);
      } else {
        s = k = static_cast<unsigned>(a.size());
      }
      const auto l = sz(lens.front());
      c.formula = "star with pumpkin leaves";
      c.expected = pow(zm1(2 * l), k - s + 1) * pow(zp1(2 * l), s - 1);
      break;
    }
    case Kind::flower: {
      const auto s = static_cast<unsigned>(a[0]);
      const auto l = sz(spec.b[0]);
      c.formula = "flower";
      c.expected = pow(zm1(l), s + 1) * pow(zp1(l), s - 1);
      break;
    }
    case Kind::loop:
      c.formula = "loop";
      c.expected = pow(zm1(sz(a[0])), 2);
      break;
    case Kind::path:
      c.formula = "interval";
      c.expected = zm1(2 * sz(a[0]));
      break;
    default:
      throw UnsupportedError("no closed-form secular polynomial for family '" + kind_name(spec.kind) + "'");
  }
  c.computed = secular_polynomial(g).numerator();
  c.matches = matches(c.computed, c.expected);
  return c;
}

FormulaCheck validate_doubling(const MetricGraph& g) {
  FormulaCheck c;
  c.formula = "doubled graph";
  c.expected = secular_polynomial(g).numerator();
  for (Length l : g.lengths()) c.expected = c.expected * zm1(2 * sz(l));
  c.computed = secular_polynomial(double_graph(g)).numerator();
  c.matches = matches(c.computed, c.expected);
  return c;
}

// ------------------------------------------------------------ decorated loops

std::string canonical_graph6(const CombinatorialGraph& g) { return encode_graph6(canonical_relabel(g)); }

DecoratedLoops decorated_loops(std::size_t n, std::size_t m, std::size_t cap) {
  if (n < 3) throw InvalidArgument("decorated loops need a cycle of at least three vertices");
  if (m < n) throw InvalidArgument("vertex limit is below the cycle length");
  if (m > 62) throw UnsupportedError("vertex limit above 62");
  DecoratedLoops out;
  std::vector<Edge> cyc;
  for (Vertex i = 0; i < n; ++i) cyc.push_back(Edge{i, static_cast<Vertex>((i + 1) % n)});
  std::vector<CombinatorialGraph> level{CombinatorialGraph(n, cyc)};
  std::vector<std::pair<std::size_t, std::string>> keyed;
  std::vector<CombinatorialGraph> all;
  auto emit = [&](const std::vector<CombinatorialGraph>& graphs) {
    for (const auto& g : graphs) all.push_back(g);
  };
  emit(level);
  for (std::size_t size = n + 1; size <= m; ++size) {
    // Every decoration with `size` vertices arises by hanging a leaf on one
    // with size - 1 vertices.
    std::set<std::string> seen;
    std::vector<CombinatorialGraph> next;
    for (const auto& g : level) {
      for (Vertex v = 0; v < g.n_vertices(); ++v) {
        auto edges = g.edges();
        edges.push_back(Edge{v, static_cast<Vertex>(g.n_vertices())});
        CombinatorialGraph h(g.n_vertices() + 1, std::move(edges));
        auto key = canonical_graph6(h);
        if (seen.insert(key).second) next.push_back(canonical_relabel(h));
      }
      if (all.size() + next.size() > cap) break;
    }
    if (all.size() + next.size() > cap) {
      out.truncated = true;
      break;
    }
    emit(next);
    level = std::move(next);
  }
  keyed.reserve(all.size());
  std::vector<std::size_t> order(all.size());
  std::vector<std::string> keys(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    keys[i] = canonical_graph6(all[i]);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(all[x].n_vertices(), keys[x]) < std::pair(all[y].n_vertices(), keys[y]);
  });
  for (std::size_t i : order) out.graphs.push_back(all[i]);
  return out;
}

}  // namespace qg
