#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qgiso/error.hpp"
#include "qgiso/secular.hpp"
#include "support.hpp"

using namespace qgt;
using qg::SecularPolynomial;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Pendant 2, loop 4, pendant 2 at one centre vertex.
MetricGraph loop_with_two_pendants() { return metric(3, {{0, 1}, {0, 0}, {0, 2}}, {2, 4, 2}); }

}  // namespace

TEST_SUITE("secular") {

TEST_CASE("interval and loop") {
  auto p = qg::secular_polynomial(metric(2, {{0, 1}}, {1}));
  CHECK(p.numerator() == IntPoly{1, 0, -1});
  CHECK(p.denom == 1);
  CHECK(qg::secular_polynomial(metric(1, {{0, 0}}, {1})).numerator() == IntPoly{1, -2, 1});
}

TEST_CASE("single loop transmits perfectly") {
  auto m = qg::bond_scattering(metric(1, {{0, 0}}, {3})).dense();
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 1) == 1);
  CHECK(m(0, 1) == 0);
  CHECK(m(1, 0) == 0);
}

TEST_CASE("three-star entries") {
  auto s = qg::bond_scattering(metric(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1}));
  // bond 2a runs centre -> leaf a, 2a+1 runs back
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(s.entry(2 * a + 1, 2 * a) == 1);
    for (std::size_t b = 0; b < 3; ++b) CHECK(s.entry(2 * a, 2 * b + 1) == (a == b ? q(-1, 3) : q(2, 3)));
  }
}

TEST_CASE("loop with two pendants has the expected vertex scattering matrix") {
  // rows/columns: pendant, loop, pendant; two bonds each
  const Rational h = q(1, 2);
  const std::vector<std::vector<Rational>> expected = {
      {0, -h, h, h, 0, h},  {1, 0, 0, 0, 0, 0},  {0, h, h, -h, 0, h},
      {0, h, -h, h, 0, h},  {0, h, h, h, 0, -h}, {0, 0, 0, 0, 1, 0},
  };
  auto ours = qg::bond_scattering(loop_with_two_pendants()).dense();
  std::vector<std::size_t> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool same = true;
    for (std::size_t i = 0; i < 6 && same; ++i)
      for (std::size_t j = 0; j < 6 && same; ++j) same = ours(perm[i], perm[j]) == expected[i][j];
    found = same;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);
}

TEST_CASE("orthogonality") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto g = random_metric_graph(rng, 2 + rng() % 5, rng() % 5, 3);
    auto m = qg::bond_scattering(g).dense();
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j) {
        Rational dot = 0;
        for (std::size_t k = 0; k < m.n; ++k) dot += m(k, i) * m(k, j);
        CHECK(dot == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("complete graph K4") {
  std::vector<qg::Edge> e;
  for (qg::Vertex i = 0; i < 4; ++i)
    for (qg::Vertex j = i + 1; j < 4; ++j) e.push_back({i, j});
  auto p = qg::secular_polynomial(metric(4, e, std::vector<Length>(6, 1)));
  IntPoly expect = qg::pow(IntPoly{3, 2, 3}, 3) * qg::pow(IntPoly{-1, 1}, 4) * qg::pow(IntPoly{1, 1}, 2);
  CHECK(qg::proportional(p.numerator(), expect));
}

TEST_CASE("pendant on a loop of four matches the hand calculation") {
  // (z^2 - 1)^2 (7 z^2 + 7 z^4 + 3 z^6 + 3) / 3
  IntPoly expect = qg::pow(IntPoly{-1, 0, 1}, 2) * IntPoly{3, 0, 7, 0, 7, 0, 3};
  auto c = qg::secular_polynomial(metric(2, {{0, 1}, {0, 0}}, {1, 4}));
  CHECK(qg::proportional(c.numerator(), expect));
  // double edge A-B, pendant at A, two pendants at B, all unit length
  auto d = qg::secular_polynomial(metric(5, {{0, 2}, {0, 1}, {0, 1}, {1, 3}, {1, 4}}, {1, 1, 1, 1, 1}));
  CHECK(qg::proportional(d.numerator(), expect));
  CHECK(c == d);
}

TEST_CASE("loop of eight and its partner") {
  auto loop = qg::secular_polynomial(metric(1, {{0, 0}}, {8}));
  CHECK(loop == qg::secular_polynomial(loop_with_two_pendants()));
}

TEST_CASE("invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto g = random_metric_graph(rng, 1 + rng() % 6, rng() % 4, 3);
    auto p = qg::secular_polynomial(g);
    auto c = qg::check_secular(p, g.integer_length());
    CHECK(c.constant_term_one);
    CHECK(c.degree_is_2L);
    CHECK(c.self_inversive);
  }
}

TEST_CASE("modular kernel agrees with the exact reference") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    auto g = random_metric_graph(rng, 1 + rng() % 6, rng() % 4, 3);
    CHECK(qg::secular_polynomial(g) == qg::secular_polynomial_reference(g));
  }
}

TEST_CASE("determinant oracle at rational points") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto g = random_metric_graph(rng, 1 + rng() % 5, rng() % 3, 2);
    auto p = qg::secular_polynomial(g);
    // P(0) = 1, so the determinant equals P exactly
    for (int s = 0; s < 5; ++s) {
      Rational z0 = q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
      CHECK(p.eval(z0) == secular_by_hand(g, z0));
    }
  }
}

TEST_CASE("subdivision invariance and scaling") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 15; ++t) {
    auto g = random_metric_graph(rng, 2 + rng() % 4, rng() % 3, 4);
    auto p = qg::secular_polynomial(g);
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
      if (g.length(e) < 2) continue;
      std::vector<Length> parts{1, g.length(e) - 1};
      CHECK(qg::secular_polynomial(qg::subdivide(g, e, parts)) == p);
      break;
    }
    auto doubled_lengths = g.lengths();
    for (auto& l : doubled_lengths) l *= 2;
    MetricGraph h(g.graph(), doubled_lengths, g.unit() / 2);
    CHECK(qg::secular_polynomial(h).numerator() == p.numerator().inflate(2));
    CHECK(qg::secular_polynomial(h).reduced() == p.reduced());
  }
}

TEST_CASE("disconnected input is rejected") {
  CHECK_THROWS_AS(qg::secular_polynomial(metric(4, {{0, 1}, {2, 3}}, {1, 1})), qg::InvalidArgument);
}

TEST_CASE("pendant bivariate polynomial") {
  // loop of length 4: (z^4 - 1)(w^2 (3 z^4 - 1) + z^4 - 3)
  auto loop = qg::bivariate_secular(metric(1, {{0, 0}}, {4}), 0);
  std::vector<IntPoly> t = {IntPoly{-3, 0, 0, 0, 1} * IntPoly{-1, 0, 0, 0, 1}, IntPoly{},
                            IntPoly{-1, 0, 0, 0, 3} * IntPoly{-1, 0, 0, 0, 1}};
  CHECK(loop.q == qg::BiPoly(t).normalized());

  // interval of length 4 at its midpoint: (1 + z^4)(...)
  auto mid = qg::bivariate_secular(metric(3, {{0, 2}, {2, 1}}, {2, 2}), 2);
  std::vector<IntPoly> u = {IntPoly{-3, 0, 0, 0, 1} * IntPoly{1, 0, 0, 0, 1}, IntPoly{},
                            IntPoly{-1, 0, 0, 0, 3} * IntPoly{1, 0, 0, 0, 1}};
  CHECK(mid.q == qg::BiPoly(u).normalized());

  // w -> z: star with leaves 2, 2, 1
  auto star = qg::secular_polynomial(metric(4, {{0, 1}, {0, 2}, {0, 3}}, {2, 2, 1}));
  CHECK(qg::proportional(mid.q.specialize_w_power(1), star.numerator()));
}

TEST_CASE("bivariate specialisation and reference") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 15; ++t) {
    auto g = random_metric_graph(rng, 1 + rng() % 5, rng() % 3, 3);
    const auto v = static_cast<qg::Vertex>(rng() % g.n_vertices());
    auto b = qg::bivariate_secular(g, v);
    CHECK(b.q == qg::bivariate_secular_reference(g, v).q);
    CHECK(!b.q.w_coeff(0).is_zero());
    for (Length m = 1; m <= 3; ++m) {
      auto edges = g.edges();
      auto lengths = g.lengths();
      edges.push_back({v, static_cast<qg::Vertex>(g.n_vertices())});
      lengths.push_back(m);
      auto p = qg::secular_polynomial(metric(g.n_vertices() + 1, edges, lengths));
      CHECK(qg::proportional(b.q.specialize_w_power(static_cast<std::size_t>(m)), p.numerator()));
    }
  }
}

TEST_CASE("vertex out of range") {
  CHECK_THROWS_AS(qg::bivariate_secular(metric(2, {{0, 1}}, {1}), 5), qg::InvalidArgument);
}

}
