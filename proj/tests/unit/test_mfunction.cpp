#include <doctest.h>

#include "qgiso/error.hpp"
#include "qgiso/mfunction.hpp"
#include "qgiso/secular.hpp"
#include "qgiso/spectrum.hpp"
#include "support.hpp"

using namespace qgt;

namespace {

/// Identifies vertex u of h with vertex v of g; h's vertices come first.
MetricGraph glue(const MetricGraph& h, qg::Vertex u, const MetricGraph& g, qg::Vertex v) {
  const auto base = static_cast<qg::Vertex>(h.n_vertices());
  auto map = [&](qg::Vertex x) -> qg::Vertex {
    if (x == v) return u;
    return base + (x > v ? x - 1 : x);
  };
  auto edges = h.edges();
  auto lengths = h.lengths();
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    edges.push_back({map(g.edges()[e].u), map(g.edges()[e].v)});
    lengths.push_back(g.length(e));
  }
  return metric(h.n_vertices() + g.n_vertices() - 1, edges, lengths, h.unit());
}

qg::BiPoly bi(std::vector<IntPoly> t) { return qg::BiPoly(std::move(t)).normalized(); }

}  // namespace

TEST_SUITE("mfunction") {

TEST_CASE("loop of four and interval of four at its midpoint") {
  auto loop = qg::m_signature(metric(1, {{0, 0}}, {4}), 0);
  auto expect = bi({IntPoly{-3, 0, 0, 0, 1}, IntPoly{}, IntPoly{-1, 0, 0, 0, 3}});
  CHECK(loop.q == expect);
  CHECK(loop.discarded == IntPoly{-1, 0, 0, 0, 1});

  auto interval = metric(3, {{0, 2}, {2, 1}}, {2, 2});
  auto mid = qg::m_signature(interval, 2);
  CHECK(mid.q == expect);
  CHECK(mid.discarded == IntPoly{1, 0, 0, 0, 1});
  CHECK(qg::same_m(metric(1, {{0, 0}}, {4}), 0, interval, 2));
  CHECK(qg::m_rational(metric(1, {{0, 0}}, {4}), 0) == qg::m_rational(interval, 2));
}

TEST_CASE("interval endpoint versus midpoint") {
  auto halves = metric(3, {{0, 2}, {2, 1}}, {1, 1}, Rational(1, 2));
  auto whole = metric(2, {{0, 1}}, {2}, Rational(1, 2));
  CHECK_FALSE(qg::same_m(whole, 0, halves, 2));
  CHECK(qg::same_m(whole, 0, halves, 0));
  CHECK_THROWS_AS(qg::same_m(metric(2, {{0, 1}}, {1}), 0, halves, 2), qg::IncomparableError);
}

TEST_CASE("pendant interval from its free end is k tan(ck)") {
  for (Length c = 1; c <= 4; ++c) {
    auto m = qg::m_rational(metric(2, {{0, 1}}, {c}), 0);
    CHECK(m.num == IntPoly::power_minus_one(static_cast<std::size_t>(2 * c)) * Integer(-1));
    CHECK(m.den == IntPoly::power_plus_one(static_cast<std::size_t>(2 * c)));
  }
}

TEST_CASE("star centre with two leaves is the interval midpoint") {
  auto star = metric(3, {{0, 1}, {0, 2}}, {1, 1});
  auto interval = metric(3, {{1, 0}, {0, 2}}, {1, 1});
  CHECK(qg::m_rational(star, 0) == qg::m_rational(interval, 0));
  CHECK(qg::same_m(star, 0, interval, 0));
}

TEST_CASE("chain of loops end vertex matches a loop of the same length") {
  // loops of lengths 1, 1, 2 as pairs of parallel edges, half units
  auto chain = metric(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}, {1, 1, 1, 1, 2, 2}, Rational(1, 2));
  auto loop = metric(1, {{0, 0}}, {8}, Rational(1, 2));
  CHECK(qg::same_m(chain, 0, loop, 0));
  CHECK(qg::m_rational(chain, 0) == qg::m_rational(loop, 0));
  CHECK(qg::same_m(chain, 3, loop, 0));
  CHECK_FALSE(qg::same_m(chain, 1, loop, 0));
}

TEST_CASE("signature and oracle agree") {
  std::mt19937_64 rng(51);
  std::vector<MetricGraph> graphs;
  for (int t = 0; t < 12; ++t) graphs.push_back(random_metric_graph(rng, 1 + rng() % 4, rng() % 3, 2));
  graphs.push_back(metric(1, {{0, 0}}, {2}));
  graphs.push_back(metric(3, {{0, 2}, {2, 1}}, {1, 1}));
  graphs.push_back(metric(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1}));
  std::vector<std::pair<std::size_t, qg::Vertex>> refs;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (qg::Vertex v = 0; v < graphs[i].n_vertices(); ++v) refs.emplace_back(i, v);
  std::vector<qg::MSignature> sig;
  std::vector<qg::MRational> rat;
  for (auto [i, v] : refs) {
    sig.push_back(qg::m_signature(graphs[i], v));
    rat.push_back(qg::m_rational(graphs[i], v));
  }
  std::size_t equal_pairs = 0;
  for (std::size_t a = 0; a < refs.size(); ++a)
    for (std::size_t b = a + 1; b < refs.size(); ++b) {
      const bool s = qg::same_signature(sig[a], sig[b]);
      CHECK(s == (rat[a] == rat[b]));
      equal_pairs += s;
    }
  CHECK(equal_pairs > 0);
}

TEST_CASE("M-functions add under gluing") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    auto h = random_metric_graph(rng, 1 + rng() % 3, rng() % 2, 2);
    auto g = random_metric_graph(rng, 1 + rng() % 3, rng() % 2, 2);
    const auto u = static_cast<qg::Vertex>(rng() % h.n_vertices());
    const auto v = static_cast<qg::Vertex>(rng() % g.n_vertices());
    auto glued = glue(h, u, g, v);
    CHECK(qg::m_rational(glued, u) == qg::m_rational(h, u) + qg::m_rational(g, v));
  }
}

TEST_CASE("signature times discarded factor recovers the pendant polynomial") {
  std::mt19937_64 rng(57);
  for (int t = 0; t < 10; ++t) {
    auto g = random_metric_graph(rng, 1 + rng() % 4, rng() % 3, 2);
    const auto v = static_cast<qg::Vertex>(rng() % g.n_vertices());
    auto s = qg::m_signature(g, v);
    CHECK(s.q.w_degree() == 2);
    CHECK(s.q.z_content().degree() == 0);
    auto pend = glue(g, v, metric(2, {{0, 1}}, {2}), 0);
    CHECK(qg::proportional(s.q.specialize_w_power(2) * s.discarded, qg::secular_polynomial(pend).numerator()));
  }
}

TEST_CASE("rescaled signatures") {
  auto a = qg::m_signature(metric(1, {{0, 0}}, {4}), 0);
  auto b = qg::m_signature(metric(1, {{0, 0}}, {8}, Rational(1, 2)), 0);
  CHECK(qg::same_signature(qg::rescaled(a, Rational(1, 2)), b));
}

TEST_CASE("hot classes") {
  auto loop = metric(1, {{0, 0}}, {4});
  auto interval = metric(3, {{0, 2}, {2, 1}}, {2, 2});
  auto classes = qg::hot_classes({loop, interval});
  // interval ends form one class, loop vertex and midpoint another
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<qg::VertexRef>{{0, 0}, {1, 2}});
  CHECK(classes[1] == std::vector<qg::VertexRef>{{1, 0}, {1, 1}});

  auto twice = qg::hot_classes({interval, interval});
  CHECK(twice.size() == 2);
  CHECK_THROWS_AS(qg::hot_classes({loop, metric(1, {{0, 0}}, {8}, Rational(1, 2))}), qg::IncomparableError);
}

}
