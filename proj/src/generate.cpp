#include "qgiso/generate.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_set>

#include "qgiso/error.hpp"
#include "qgiso/graph6.hpp"
#include "qgiso/isomorphism.hpp"

namespace qg {

namespace {

using Extend = std::vector<CombinatorialGraph> (*)(const CombinatorialGraph&);

std::vector<CombinatorialGraph> add_vertex(const CombinatorialGraph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<CombinatorialGraph> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    auto edges = g.edges();
    for (Vertex v = 0; v < n; ++v)
      if (mask & (1U << v)) edges.push_back(Edge{v, static_cast<Vertex>(n)});
    out.emplace_back(n + 1, std::move(edges));
  }
  return out;
}

std::vector<CombinatorialGraph> add_leaf(const CombinatorialGraph& g) {
  std::vector<CombinatorialGraph> out;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    auto edges = g.edges();
    edges.push_back(Edge{v, static_cast<Vertex>(g.n_vertices())});
    out.emplace_back(g.n_vertices() + 1, std::move(edges));
  }
  return out;
}

std::vector<std::string> grow(std::size_t n, Extend extend, std::size_t jobs) {
  std::vector<std::string> level{encode_graph6(CombinatorialGraph(1, {}))};
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<std::unordered_set<std::string>> found(std::max<std::size_t>(jobs, 1));
    const auto count = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(static_cast<int>(found.size()))
    for (std::int64_t i = 0; i < count; ++i) {
      auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
      for (const auto& child : extend(parse_graph6(level[i]))) mine.insert(encode_graph6(canonical_relabel(child)));
    }
    std::unordered_set<std::string> all;
    for (auto& f : found) all.merge(f);
    level.assign(all.begin(), all.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

}  // namespace

std::vector<std::string> connected_graphs(std::size_t n, std::size_t jobs) {
  if (n < 1 || n > 10) throw UnsupportedError("connected graph generation supports 1..10 vertices");
  return grow(n, add_vertex, jobs);
}

std::vector<std::string> trees(std::size_t n) {
  if (n < 1 || n > 62) throw UnsupportedError("tree generation supports 1..62 vertices");
  return grow(n, add_leaf, 1);
}

}  // namespace qg
