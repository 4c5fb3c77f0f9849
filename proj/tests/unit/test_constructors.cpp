#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "qgiso/constructors.hpp"
#include "qgiso/error.hpp"
#include "qgiso/isomorphism.hpp"
#include "qgiso/mfunction.hpp"
#include "qgiso/secular.hpp"
#include "qgiso/spectrum.hpp"
#include "support.hpp"

using namespace qgt;
using qg::Vertex;

namespace {

IntPoly zm1(std::size_t n) { return IntPoly::power_minus_one(n); }
IntPoly zp1(std::size_t n) { return IntPoly::power_plus_one(n); }

IntPoly secular(const MetricGraph& g) { return qg::secular_polynomial(g).numerator(); }

/// All multisets of positive parts with sum <= limit, parts non-increasing.
void multisets(Length limit, std::vector<Length>& cur, const std::function<void(const std::vector<Length>&)>& f) {
  const Length used = std::accumulate(cur.begin(), cur.end(), Length{0});
  if (!cur.empty()) f(cur);
  const Length top = cur.empty() ? limit : std::min(cur.back(), limit - used);
  for (Length x = 1; x <= top; ++x) {
    cur.push_back(x);
    multisets(limit, cur, f);
    cur.pop_back();
  }
}

// Loop of length 8 with two pendants of length 2 at the loop vertex.
MetricGraph loop_with_two_pendants() { return qg::build(qg::parse_family("edges:0-1:2,0-0:4,0-2:2")); }

// Loop of length 2 between vertices 0 and 1; unit pendants at 0, length-2 pendants at 1.
MetricGraph loop_with_four_pendants() {
  return qg::build(qg::parse_family("edges:0-1:1,1-0:1,0-2:1,0-3:1,1-4:2,1-5:2"));
}

// Loop of length 1 and a tail of length 1, in half units.
// 0 junction, 1 tail end, 2 loop point opposite the junction, 3 tail midpoint.
MetricGraph balanced_tadpole() { return metric(4, {{0, 2}, {2, 0}, {0, 3}, {3, 1}}, {1, 1, 1, 1}, Rational(1, 2)); }

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("family text round trip") {
  for (const char* s : {"path:3", "loop:8", "star:1,2,2", "complete:4", "flower:3@2", "pumpkin:3@1",
                        "pumpkin-chain:2@1,3@2", "chain-of-loops:1,1,2", "ring-of-loops:2,1",
                        "tadpole:2,1", "pumpkin-star:4+3+3@1", "pumpkin-star:2+2@1+3",
                        "pumpkin-pair:7,5@1", "edges:0-1:2,0-0:4", "loop:1;unit=1/8"}) {
    CHECK(qg::to_string(qg::parse_family(s)) == s);
    CHECK(qg::looks_like_family(s));
  }
  CHECK_FALSE(qg::looks_like_family("Bw"));
  CHECK_FALSE(qg::looks_like_family("file:corpus.g6"));
  CHECK_THROWS_AS(qg::parse_family("loop:0"), qg::InvalidArgument);
  CHECK_THROWS_AS(qg::parse_family("loop:x"), qg::ParseError);
  CHECK_THROWS_AS(qg::parse_family("hexagon:3"), qg::ParseError);
  CHECK_THROWS_AS(qg::parse_family("tadpole:1"), qg::InvalidArgument);
  CHECK_THROWS_AS(qg::parse_family("pumpkin-star:1+2+3@1+2"), qg::InvalidArgument);
}

TEST_CASE("builders") {
  auto k4 = qg::build(qg::parse_family("complete:4"));
  CHECK(k4.n_vertices() == 4);
  CHECK(k4.n_edges() == 6);
  CHECK(k4.graph().is_simple());

  auto chain = qg::build(qg::parse_family("chain-of-loops:1,1,2"));
  CHECK(chain.n_vertices() == 4);
  CHECK(chain.n_edges() == 6);
  CHECK(chain.total_length() == 4);

  auto star = qg::build(qg::parse_family("pumpkin-star:4+3+3@1"));
  CHECK(star.n_vertices() == 4);
  CHECK(star.n_edges() == 10);
  CHECK(star.graph().valence(0) == 10);

  auto pair = qg::build(qg::parse_family("pumpkin-pair:7,5@1"));
  CHECK(pair.n_edges() == 12);
  CHECK(pair.graph().valence(1) == 12);

  auto tadpole = qg::build(qg::parse_family("tadpole:3,2"));
  CHECK(tadpole.total_length() == 5);
  CHECK(tadpole.graph().valence(0) == 3);

  // a degree-2 pumpkin is a loop
  auto p2 = qg::build(qg::parse_family("pumpkin:2@2"));
  CHECK(qg::same_spectrum(qg::secular_polynomial(p2), qg::secular_polynomial(qg::build(qg::parse_family("loop:4")))));
}

TEST_CASE("graft and double") {
  auto loop4 = qg::build(qg::parse_family("loop:4"));
  auto eight = qg::graft(loop4, 0, loop4, 0);
  CHECK(eight.n_vertices() == 1);
  CHECK(qg::is_isometric(eight, qg::build(qg::parse_family("flower:2@4"))));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto h = random_metric_graph(rng, 1 + rng() % 5, rng() % 3, 3);
    auto g = random_metric_graph(rng, 1 + rng() % 5, rng() % 3, 3);
    const Vertex u = rng() % h.n_vertices(), v = rng() % g.n_vertices();
    auto x = qg::graft(h, u, g, v);
    CHECK(x.n_vertices() == h.n_vertices() + g.n_vertices() - 1);
    CHECK(x.n_edges() == h.n_edges() + g.n_edges());
    CHECK(x.total_length() == h.total_length() + g.total_length());
    CHECK(x.graph().valence(u) == h.graph().valence(u) + g.graph().valence(v));
  }

  // units are reconciled before gluing
  auto half = metric(2, {{0, 1}}, {1}, Rational(1, 2));
  auto x = qg::graft(loop4, 0, half, 0);
  CHECK(x.unit() == Rational(1, 2));
  CHECK(x.total_length() == Rational(9, 2));

  auto edge = qg::double_graph(metric(2, {{0, 1}}, {3}));
  CHECK(qg::is_isometric(edge, qg::build(qg::parse_family("pumpkin:2@3"))));
  // interval of length 2 with its midpoint: a chain of two unit loops
  auto mid = qg::double_graph(metric(3, {{0, 1}, {1, 2}}, {1, 1}));
  CHECK(qg::is_isometric(mid, qg::build(qg::parse_family("chain-of-loops:2,2")).reduced()));
}

TEST_CASE("closed forms written out") {
  // complete graph K4: F = 3, P = 2
  CHECK(proportional_up_to_monomial(secular(qg::build(qg::parse_family("complete:4"))),
                                    pow(IntPoly{3, 2, 3}, 3) * pow(zm1(1), 4) * pow(zp1(1), 2)));
  // twelve edges shared 7 + 5
  CHECK(proportional_up_to_monomial(secular(qg::build(qg::parse_family("pumpkin-pair:7,5@1"))),
                                    pow(zm1(2), 11) * zp1(2)));
  // three pumpkin leaves, ten edges
  CHECK(proportional_up_to_monomial(secular(qg::build(qg::parse_family("pumpkin-star:4+3+3@1"))),
                                    pow(zm1(2), 8) * pow(zp1(2), 2)));
  CHECK(proportional_up_to_monomial(secular(qg::build(qg::parse_family("flower:2@1"))),
                                    pow(zm1(1), 3) * zp1(1)));
  // loops 1,1,2 in half units
  CHECK(proportional_up_to_monomial(secular(metric(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}},
                                                   {1, 1, 1, 1, 2, 2}, Rational(1, 2))),
                                    zm1(8) * zm1(2) * zm1(2) * zm1(4)));
}

TEST_CASE("closed-form validators") {
  for (int v = 3; v <= 10; ++v) {
    auto c = qg::validate_formula(qg::parse_family("complete:" + std::to_string(v)));
    CHECK_MESSAGE(c.matches, "complete:", v);
  }
  std::vector<Length> cur;
  std::size_t checked = 0;
  multisets(12, cur, [&](const std::vector<Length>& ls) {
    qg::FamilySpec s;
    s.a = ls;
    s.kind = qg::FamilySpec::Kind::chain_of_loops;
    CHECK_MESSAGE(qg::validate_formula(s).matches, qg::to_string(s));
    s.kind = qg::FamilySpec::Kind::ring_of_loops;
    CHECK_MESSAGE(qg::validate_formula(s).matches, qg::to_string(s));
    ++checked;
  });
  CHECK(checked > 250);
  for (int k = 2; k <= 12; ++k)
    for (int k1 = 1; k1 < k; ++k1)
      for (int l = 1; l <= 2; ++l) {
        auto s = "pumpkin-pair:" + std::to_string(k1) + "," + std::to_string(k - k1) + "@" + std::to_string(l);
        CHECK_MESSAGE(qg::validate_formula(qg::parse_family(s)).matches, s);
      }
  std::mt19937_64 rng(5);
  for (int s = 1; s <= 5; ++s)
    for (int k = s; k <= 12; ++k) {
      // random allocation of k edges over s leaves
      std::vector<Length> d(s, 1);
      for (int i = s; i < k; ++i) ++d[rng() % s];
      qg::FamilySpec f;
      f.kind = qg::FamilySpec::Kind::pumpkin_star;
      f.a = d;
      f.b = {1};
      CHECK_MESSAGE(qg::validate_formula(f).matches, qg::to_string(f));
    }
  for (int s = 1; s <= 5; ++s) {
    auto spec = "flower:" + std::to_string(s) + "@1";
    CHECK_MESSAGE(qg::validate_formula(qg::parse_family(spec)).matches, spec);
  }
  CHECK(qg::validate_formula(qg::parse_family("loop:3")).matches);
  CHECK(qg::validate_formula(qg::parse_family("path:3")).matches);
  CHECK(qg::validate_formula(qg::parse_family("star:2,2,2")).matches);
  CHECK_THROWS_AS(qg::validate_formula(qg::parse_family("tadpole:2,1")), qg::UnsupportedError);
  CHECK_THROWS_AS(qg::validate_formula(qg::parse_family("star:1,2")), qg::UnsupportedError);
}

TEST_CASE("a wrong closed form is reported as a mismatch") {
  auto c = qg::validate_formula(qg::parse_family("complete:5"));
  CHECK(c.matches);
  CHECK_FALSE(proportional_up_to_monomial(c.computed, secular(qg::build(qg::parse_family("complete:6")))));
}

TEST_CASE("doubling identity on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    auto g = random_metric_graph(rng, 2 + rng() % 5, rng() % 4, 3);
    auto c = qg::validate_doubling(g);
    CHECK_MESSAGE(c.matches, "trial ", t);
  }
}

TEST_CASE("pumpkin chains: order inside equal-degree runs is invisible") {
  using P = qg::Pumpkin;
  std::vector<P> loops{{2, 1}, {2, 2}, {2, 1}};
  auto a = qg::permute_pumpkin_chain(loops, {0, 1, 2});
  auto b = qg::permute_pumpkin_chain(loops, {1, 0, 2});
  CHECK(a == qg::pumpkin_chain(loops));
  CHECK(secular(a) == secular(b));
  CHECK_FALSE(qg::is_isometric(a, b));

  std::vector<P> mixed{{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  CHECK(secular(qg::pumpkin_chain(mixed)) == secular(qg::permute_pumpkin_chain(mixed, {0, 1, 3, 2})));
  CHECK_THROWS_AS(qg::permute_pumpkin_chain(mixed, {0, 2, 1, 3}), qg::InvalidArgument);
  CHECK_THROWS_AS(qg::permute_pumpkin_chain(mixed, {0, 0, 2, 3}), qg::InvalidArgument);

  std::mt19937_64 rng(23);
  auto host = random_metric_graph(rng, 5, 3, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<P> chain;
    const std::size_t runs = 1 + rng() % 3;
    std::vector<std::size_t> perm;
    for (std::size_t r = 0; r < runs; ++r) {
      const std::size_t degree = 2 + rng() % 3, len = 1 + rng() % 3;
      const std::size_t start = chain.size();
      for (std::size_t i = 0; i < len; ++i) chain.push_back({degree, static_cast<Length>(1 + rng() % 3)});
      std::vector<std::size_t> block(len);
      std::iota(block.begin(), block.end(), start);
      std::shuffle(block.begin(), block.end(), rng);
      perm.insert(perm.end(), block.begin(), block.end());
    }
    auto g1 = qg::pumpkin_chain(chain);
    auto g2 = qg::permute_pumpkin_chain(chain, perm);
    REQUIRE(secular(g1) == secular(g2));
    // both chain ends glued into the same host
    const auto last = static_cast<Vertex>(chain.size());
    // first end glued to host vertex 0, far end identified with host vertex 2
    auto close = [&](const MetricGraph& x) {
      const Vertex far = qg::grafted_id(host.n_vertices(), 0, 0, last);
      auto edges = x.edges();
      for (auto& e : edges) {
        if (e.u == far) e.u = 2;
        if (e.v == far) e.v = 2;
      }
      // drop the now isolated far vertex by moving the last vertex into its slot
      const Vertex top = static_cast<Vertex>(x.n_vertices() - 1);
      for (auto& e : edges) {
        if (e.u == top) e.u = far;
        if (e.v == top) e.v = far;
      }
      return metric(x.n_vertices() - 1, edges, x.lengths(), x.unit());
    };
    CHECK(secular(close(qg::graft(host, 0, g1, 0))) == secular(close(qg::graft(host, 0, g2, 0))));
  }
}

TEST_CASE("connected pumpkin pairs: edge allocation does not matter") {
  for (int k = 2; k <= 12; ++k) {
    auto ref = qg::secular_polynomial(qg::build(qg::parse_family("pumpkin-pair:1," + std::to_string(k - 1) + "@1")));
    for (int k1 = 2; k1 < k; ++k1) {
      auto p = qg::secular_polynomial(
          qg::build(qg::parse_family("pumpkin-pair:" + std::to_string(k1) + "," + std::to_string(k - k1) + "@1")));
      CHECK(qg::same_spectrum(ref, p));
    }
  }
  // the centre vertex is hot
  auto a = qg::build(qg::parse_family("pumpkin-pair:7,5@1"));
  auto b = qg::build(qg::parse_family("pumpkin-pair:9,3@1"));
  CHECK(qg::same_m(a, 1, b, 1));
}

TEST_CASE("loop of eight and its two partners") {
  auto loop = qg::secular_polynomial(qg::build(qg::parse_family("loop:8")));
  CHECK(loop == qg::secular_polynomial(loop_with_two_pendants()));
  CHECK(loop == qg::secular_polynomial(loop_with_four_pendants()));
  CHECK(loop.numerator() == pow(zm1(8), 2));
  CHECK_FALSE(qg::is_isomorphic(loop_with_two_pendants().graph(), loop_with_four_pendants().graph()));
}

TEST_CASE("hot vertex of the loop and its first partner") {
  // length four: pendant 1, loop 2, pendant 1; the loop point opposite the centre
  auto partner = metric(4, {{0, 1}, {0, 3}, {3, 0}, {0, 2}}, {1, 1, 1, 1});
  auto loop4 = qg::build(qg::parse_family("loop:4"));
  CHECK(qg::is_isospectral(loop4, partner));
  CHECK(qg::same_m(loop4, 0, partner, 3));
  CHECK_FALSE(qg::same_m(loop4, 0, partner, 0));
  CHECK_FALSE(qg::same_m(loop4, 0, partner, 1));
  auto classes = qg::hot_classes({loop4, partner});
  REQUIRE(classes.size() >= 1);
  CHECK(classes[0] == std::vector<qg::VertexRef>{{0, 0}, {1, 3}});
}

TEST_CASE("balanced tadpole has two hot vertices") {
  auto r = balanced_tadpole();
  CHECK(qg::same_m(r, 2, r, 3));
  CHECK_FALSE(qg::same_m(r, 0, r, 3));
  auto interval = metric(2, {{0, 1}}, {2}, Rational(1, 2));
  auto b = qg::graft(r, 2, interval, 0);
  auto c = qg::graft(r, 3, interval, 0);
  CHECK_FALSE(qg::is_isometric(b, c));
  CHECK(qg::is_isospectral(b, c));
  // the junction of b, where b is symmetric, joins the class of the two attachment points
  auto classes = qg::hot_classes({b, c});
  const std::vector<qg::VertexRef> triple{{0, 0}, {0, 2}, {1, 3}};
  CHECK(std::find(classes.begin(), classes.end(), triple) != classes.end());
}

TEST_CASE("grafting at M-equivalent vertices of isospectral graphs") {
  struct Pointed {
    MetricGraph g1;
    Vertex v1;
    MetricGraph g2;
    Vertex v2;
  };
  const std::vector<Pointed> pairs = {
      {qg::build(qg::parse_family("loop:4")), 0, metric(4, {{0, 1}, {0, 3}, {3, 0}, {0, 2}}, {1, 1, 1, 1}), 3},
      {balanced_tadpole(), 2, balanced_tadpole(), 3},
      {qg::build(qg::parse_family("pumpkin-pair:7,5@1")), 1, qg::build(qg::parse_family("pumpkin-pair:4,8@1")), 1},
      {qg::build(qg::parse_family("pumpkin-star:4+3+3@1")), 0, qg::build(qg::parse_family("pumpkin-star:6+2+2@1")), 0},
      {qg::build(qg::parse_family("chain-of-loops:1,2,1")), 0, qg::build(qg::parse_family("chain-of-loops:2,1,1")), 0},
  };
  std::mt19937_64 rng(29);
  int combos = 0;
  for (int t = 0; t < 25; ++t) {
    const auto& p = pairs[t % pairs.size()];
    REQUIRE(qg::is_isospectral(p.g1, p.g2));
    REQUIRE(qg::same_m(p.g1, p.v1, p.g2, p.v2));
    auto h = random_metric_graph(rng, 1 + rng() % 4, rng() % 3, 3);
    const Vertex u = rng() % h.n_vertices();
    auto x1 = qg::graft(h, u, p.g1, p.v1);
    auto x2 = qg::graft(h, u, p.g2, p.v2);
    CHECK(qg::is_isospectral(x1, x2));
    ++combos;
  }
  CHECK(combos >= 20);
}

TEST_CASE("edge replacement in the two-leaf pumpkin stars") {
  auto a = qg::build(qg::parse_family("pumpkin-star:4+1@1"));
  auto b = qg::build(qg::parse_family("pumpkin-star:3+2@1"));
  REQUIRE(qg::is_isospectral(a, b));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 3; ++t) {
    auto gamma = random_metric_graph(rng, 2 + rng() % 3, 1 + rng() % 2, 3);
    const Vertex pa = 0, pb = 1 + rng() % (gamma.n_vertices() - 1);
    auto ra = qg::replace_edges(a, gamma, pa, pb);
    auto rb = qg::replace_edges(b, gamma, pa, pb);
    CHECK(ra.n_edges() == 5 * gamma.n_edges());
    CHECK(qg::is_isospectral(ra, rb));
  }
  CHECK_THROWS_AS(qg::replace_edges(metric(2, {{0, 1}, {0, 1}}, {1, 2}), metric(2, {{0, 1}}, {1}), 0, 1),
                  qg::InvalidArgument);
}

TEST_CASE("decorated loops") {
  auto tri = qg::decorated_loops(3, 3);
  REQUIRE(tri.graphs.size() == 1);
  CHECK(tri.graphs[0].n_edges() == 3);
  CHECK_FALSE(tri.truncated);

  // square plus up to two extra vertices: 1 + 1 + 4 by hand
  auto sq = qg::decorated_loops(4, 6);
  std::vector<std::size_t> per(7, 0);
  for (const auto& g : sq.graphs) ++per[g.n_vertices()];
  CHECK(per[4] == 1);
  CHECK(per[5] == 1);
  CHECK(per[6] == 4);
  for (std::size_t i = 1; i < sq.graphs.size(); ++i) {
    CHECK(sq.graphs[i - 1].n_vertices() <= sq.graphs[i].n_vertices());
    CHECK_FALSE(qg::is_isomorphic(sq.graphs[i - 1], sq.graphs[i]));
  }
  auto capped = qg::decorated_loops(4, 10, 10);
  CHECK(capped.truncated);
  CHECK(capped.graphs.size() <= 10);
  CHECK_THROWS_AS(qg::decorated_loops(2, 5), qg::InvalidArgument);
}

}  // TEST_SUITE
