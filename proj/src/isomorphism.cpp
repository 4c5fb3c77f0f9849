#include "qgiso/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgiso/error.hpp"

namespace qg {
namespace {

using Perm = std::vector<std::uint32_t>;

/// Individualization-refinement search for the lexicographically smallest
/// relabelled adjacency matrix, with orbit pruning from discovered automorphisms.
class CanonSearch {
 public:
  CanonSearch(std::size_t n, std::vector<std::uint32_t> w) : n_(n), w_(std::move(w)) {}

  void run(const std::vector<std::uint32_t>& initial_colors) {
    std::vector<std::uint32_t> colors = initial_colors;
    refine(colors);
    std::vector<std::uint32_t> prefix;
    dfs(colors, prefix);
  }

  const std::vector<std::uint32_t>& best_encoding() const { return best_enc_; }
  const Perm& best_labeling() const { return best_lab_; }
  const std::vector<Perm>& automorphisms() const { return autos_; }

 private:
  std::uint32_t at(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  /// Equitable refinement; colors become ranks 0..k-1 of invariant signatures.
  void refine(std::vector<std::uint32_t>& colors) const {
    std::size_t n_colors = count_distinct(colors);
    std::vector<std::vector<std::uint64_t>> sig(n_);
    for (;;) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        s.push_back(at(v, v));
        const std::size_t head = s.size();
        for (std::size_t u = 0; u < n_; ++u) {
          if (u == v || at(v, u) == 0) continue;
          s.push_back((static_cast<std::uint64_t>(colors[u]) << 32) | at(v, u));
        }
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(head), s.end());
      }
      std::vector<std::uint32_t> order(n_);
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
        colors[order[k]] = rank;
      }
      const std::size_t now = n_ == 0 ? 0 : rank + 1;
      if (now == n_colors) return;
      n_colors = now;
    }
  }

  static std::size_t count_distinct(const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  void dfs(const std::vector<std::uint32_t>& colors, std::vector<std::uint32_t>& prefix) {
    // Target cell: lowest color with more than one vertex.
    std::vector<std::uint32_t> cell_size(n_, 0);
    for (auto c : colors) ++cell_size[c];
    std::uint32_t target = static_cast<std::uint32_t>(n_);
    for (std::uint32_t c = 0; c < n_; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target == n_) {
      leaf(colors);
      return;
    }
    std::vector<std::uint32_t> cell;
    for (std::uint32_t v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<std::uint32_t> explored;
    for (std::uint32_t v : cell) {
      if (!explored.empty() && same_orbit_as_explored(v, explored, prefix)) continue;
      explored.push_back(v);
      std::vector<std::uint32_t> child(n_);
      for (std::uint32_t u = 0; u < n_; ++u) child[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1U : 0U);
      refine(child);
      prefix.push_back(v);
      dfs(child, prefix);
      prefix.pop_back();
    }
  }

  bool same_orbit_as_explored(std::uint32_t v, const std::vector<std::uint32_t>& explored,
                              const std::vector<std::uint32_t>& prefix) const {
    if (autos_.empty()) return false;
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& g : autos_) {
      bool fixes = true;
      for (auto p : prefix)
        if (g[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (std::uint32_t x = 0; x < n_; ++x) {
        auto a = find(x), b = find(g[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const auto root = find(v);
    for (auto e : explored)
      if (find(e) == root) return true;
    return false;
  }

  void leaf(const std::vector<std::uint32_t>& lab) {
    std::vector<std::uint32_t> inv(n_);
    for (std::uint32_t v = 0; v < n_; ++v) inv[lab[v]] = v;
    std::vector<std::uint32_t> enc;
    enc.reserve(n_ * (n_ + 1) / 2);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) enc.push_back(at(inv[i], inv[j]));
    if (best_lab_.empty() || enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_lab_ = lab;
      return;
    }
    if (enc == best_enc_) {
      // gamma = best^-1 o lab maps v to the vertex holding the same position in the best leaf.
      std::vector<std::uint32_t> best_inv(n_);
      for (std::uint32_t v = 0; v < n_; ++v) best_inv[best_lab_[v]] = v;
      Perm g(n_);
      for (std::uint32_t v = 0; v < n_; ++v) g[v] = best_inv[lab[v]];
      autos_.push_back(std::move(g));
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> w_;
  std::vector<std::uint32_t> best_enc_;
  Perm best_lab_;
  std::vector<Perm> autos_;
};

struct LabelledInput {
  std::size_t n = 0;
  std::vector<std::vector<Length>> label_sets;
  std::vector<std::uint32_t> w;
};

LabelledInput build_input(std::size_t n, const std::vector<Edge>& edges, const std::vector<Length>& labels) {
  std::map<std::pair<Vertex, Vertex>, std::vector<Length>> cells;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Vertex a = std::min(edges[e].u, edges[e].v), b = std::max(edges[e].u, edges[e].v);
    cells[{a, b}].push_back(labels[e]);
  }
  std::vector<std::vector<Length>> sets;
  for (auto& [key, ls] : cells) {
    std::sort(ls.begin(), ls.end());
    sets.push_back(ls);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  LabelledInput in;
  in.n = n;
  in.w.assign(n * n, 0);
  for (auto& [key, ls] : cells) {
    auto id = static_cast<std::uint32_t>(std::lower_bound(sets.begin(), sets.end(), ls) - sets.begin() + 1);
    in.w[key.first * n + key.second] = id;
    in.w[key.second * n + key.first] = id;
  }
  in.label_sets = std::move(sets);
  return in;
}

CanonicalLabeling run_canon(LabelledInput in) {
  CanonSearch s(in.n, in.w);
  s.run(std::vector<std::uint32_t>(in.n, 0));
  CanonicalLabeling out;
  out.form.n_vertices = in.n;
  out.form.label_sets = std::move(in.label_sets);
  out.form.matrix = s.best_encoding();
  out.position.assign(s.best_labeling().begin(), s.best_labeling().end());
  return out;
}

}  // namespace

std::size_t CanonicalForm::hash() const noexcept {
  std::size_t h = n_vertices * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto x : matrix) mix(x);
  for (const auto& s : label_sets)
    for (auto l : s) mix(static_cast<std::uint64_t>(l));
  return h;
}

CanonicalLabeling canonical_labeling(const CombinatorialGraph& g) {
  return run_canon(build_input(g.n_vertices(), g.edges(), std::vector<Length>(g.n_edges(), 1)));
}

CanonicalLabeling canonical_labeling(const MetricGraph& g) {
  return run_canon(build_input(g.n_vertices(), g.edges(), g.lengths()));
}

CanonicalForm canonical_form(const CombinatorialGraph& g) { return canonical_labeling(g).form; }
CanonicalForm canonical_form(const MetricGraph& g) { return canonical_labeling(g).form; }

CombinatorialGraph canonical_relabel(const CombinatorialGraph& g) {
  auto lab = canonical_labeling(g);
  std::vector<Edge> edges;
  edges.reserve(g.n_edges());
  for (const auto& e : g.edges()) {
    Vertex a = lab.position[e.u], b = lab.position[e.v];
    edges.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.v, x.u) < std::pair(y.v, y.u); });
  return CombinatorialGraph(g.n_vertices(), std::move(edges));
}

bool is_isomorphic(const CombinatorialGraph& g1, const CombinatorialGraph& g2) {
  if (g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges()) return false;
  auto d1 = g1.valences(), d2 = g2.valences();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return canonical_form(g1) == canonical_form(g2);
}

bool is_isometric(const MetricGraph& g1, const MetricGraph& g2) {
  if (g1.total_length() != g2.total_length()) return false;
  auto [a, b] = to_common_unit(smooth_all(g1), smooth_all(g2));
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<Vertex>> vertex_orbits(const MetricGraph& g) {
  auto in = build_input(g.n_vertices(), g.edges(), g.lengths());
  const std::size_t n = in.n;
  CanonSearch s(n, in.w);
  s.run(std::vector<std::uint32_t>(n, 0));
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : s.automorphisms())
    for (Vertex x = 0; x < n; ++x) {
      auto r1 = find(x), r2 = find(a[x]);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (Vertex x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<Vertex>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace qg
