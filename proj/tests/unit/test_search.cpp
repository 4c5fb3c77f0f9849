#include <doctest.h>

#include <sstream>

#include "qgiso/charpoly.hpp"
#include "qgiso/error.hpp"
#include "qgiso/generate.hpp"
#include "qgiso/graph6.hpp"
#include "qgiso/isomorphism.hpp"
#include "qgiso/search.hpp"
#include "support.hpp"

using namespace qgt;

namespace {

std::vector<qg::CorpusEntry> corpus(const std::vector<std::string>& lines) {
  std::vector<qg::CorpusEntry> out;
  for (std::size_t i = 0; i < lines.size(); ++i) out.push_back({"mem", i + 1, lines[i]});
  return out;
}

bool has_pendant(const CombinatorialGraph& g) {
  for (auto d : g.valences())
    if (d == 1) return true;
  return false;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("corpus reader") {
  std::istringstream in(">>graph6<<A_\r\n\nBw\nCF\n");
  auto c = qg::read_corpus(in, "x.g6");
  REQUIRE(c.size() == 3);
  CHECK(c[0].graph6 == "A_");
  CHECK(c[1].line == 3);
  CHECK(c[2].graph6 == "CF");
  CHECK(c[2].source == "x.g6");
  CHECK_THROWS_AS(qg::read_corpus_file("/nonexistent/corpus.g6"), qg::Error);
}

TEST_CASE("generated corpora have the known sizes") {
  // connected graphs and trees by vertex count
  const std::size_t connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(qg::connected_graphs(n).size() == connected[n]);
  const std::size_t tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= 12; ++n) CHECK(qg::trees(n).size() == tree_counts[n]);
  CHECK_THROWS_AS(qg::connected_graphs(11), qg::UnsupportedError);
}

TEST_CASE("generated graphs are connected and pairwise non-isomorphic") {
  auto five = qg::connected_graphs(5);
  std::vector<CombinatorialGraph> gs;
  for (const auto& s : five) gs.push_back(qg::parse_graph6(s));
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(gs[i].is_connected());
    for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(qg::is_isomorphic(gs[i], gs[j]));
  }
  CHECK(std::is_sorted(five.begin(), five.end()));
  CHECK(qg::connected_graphs(6, 3) == qg::connected_graphs(6, 1));
  for (const auto& s : qg::trees(8)) CHECK(qg::parse_graph6(s).is_tree());
}

TEST_CASE("prefilter key ignores the valence product") {
  // the six-vertex pair: C(x) differs by det T, the key does not
  auto a = qg::parse_graph6("ER\\w"), b = qg::parse_graph6("ET\\w");
  CHECK(qg::char_poly(a) != qg::char_poly(b));
  CHECK(qg::char_poly_key(a) == qg::char_poly_key(b));
  CHECK(qg::char_poly(a) * Integer(4) == qg::char_poly(b) * Integer(3));
}

TEST_CASE("six vertices: one pair, one member with a pendant edge") {
  auto c = corpus(qg::connected_graphs(6));
  REQUIRE(c.size() == 112);
  auto r = qg::search(c, {});
  REQUIRE(r.sets.size() == 1);
  const auto& s = r.sets[0];
  REQUIRE(s.members.size() == 2);
  CHECK(has_pendant(s.members[0].graph) != has_pendant(s.members[1].graph));
  CHECK(s.char_poly_shared);
  CHECK(r.graphs_used == 112);
  CHECK(r.secular_evaluations < 112);
  CHECK(qg::verify_sets(r.sets).ok);
}

TEST_CASE("prefilter audit and determinism on six vertices") {
  auto c = corpus(qg::connected_graphs(6));
  auto audit = qg::prefilter_soundness_audit(c, {});
  CHECK(audit.identical);
  CHECK(audit.char_poly_discoveries.empty());
  CHECK(audit.without_prefilter.secular_evaluations == 112);
  qg::SearchConfig four;
  four.jobs = 4;
  CHECK(qg::to_jsonl(qg::search(c, {}).sets) == qg::to_jsonl(qg::search(c, four).sets));

  auto empty = qg::prefilter_soundness_audit({}, {});
  CHECK(empty.identical);
  CHECK(empty.with_prefilter.sets.empty());
}

TEST_CASE("small trees have no isospectral partners, nine-vertex trees one pair") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(qg::tree_search(corpus(qg::trees(n)), {}).sets.empty());
  auto r = qg::tree_search(corpus(qg::trees(9)), {});
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].members.size() == 2);
  CHECK(qg::verify_sets(r.sets).ok);
}

TEST_CASE("bad inputs become warnings") {
  // disconnected, unparsable, edgeless, a duplicate of the first line, then the six-vertex pair
  auto c = corpus({"ER\\w", "C?", "!!", "@", "ER\\w", "ET\\w"});
  // relabel the duplicate so it is isomorphic but not identical text
  auto dup = qg::parse_graph6("ER\\w");
  std::vector<qg::Edge> edges;
  for (auto e : dup.edges()) edges.push_back({5 - e.u, 5 - e.v});
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  c[4].graph6 = qg::encode_graph6(CombinatorialGraph(6, edges));
  auto r = qg::search(c, {});
  CHECK(r.graphs_read == 6);
  CHECK(r.graphs_used == 3);
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].members.size() == 2);
  REQUIRE(r.warnings.size() == 4);
  CHECK(r.warnings[0].line == 2);
  CHECK(r.warnings[1].line == 3);
  CHECK(r.warnings[2].line == 4);
  CHECK(r.warnings[3].line == 5);
  CHECK(r.warnings[3].message.find("isomorphic") != std::string::npos);

  auto t = qg::tree_search(corpus({"ER\\w", "EAIW"}), {});
  CHECK(t.graphs_used == 1);
  CHECK(t.warnings.size() == 1);
  CHECK_THROWS_AS(qg::search(c, qg::SearchConfig{true, qg::Normalization::total_length_one, 0, false}),
                  qg::InvalidArgument);
}

TEST_CASE("native units and the verification post-pass") {
  auto c = corpus(qg::connected_graphs(6));
  qg::SearchConfig native;
  native.normalization = qg::Normalization::native;
  auto r = qg::search(c, native);
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].normalization == qg::Normalization::native);
  CHECK(qg::verify_sets(r.sets).ok);

  // a forged set must be rejected
  auto forged = r.sets;
  forged[0].members[1] = forged[0].members[0];
  auto v = qg::verify_sets(forged);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.failures.empty());
}

TEST_CASE("jsonl layout") {
  auto r = qg::search(corpus(qg::connected_graphs(6)), {});
  auto line = qg::to_jsonl(r.sets);
  REQUIRE(line.back() == '\n');
  auto j = qg::Json::parse(line);
  CHECK(j["size"] == 2);
  CHECK(j["members"].size() == 2);
  CHECK(j["members"][0].contains("graph6"));
  CHECK(j["members"][0]["vertices"] == 6);
  CHECK(j["char_poly"].is_array());
  CHECK(j["secular"]["unit"] == "1/10");
  CHECK(j["prefilter"] == true);
  CHECK(j["normalization"] == "total-length-1");
}

}  // TEST_SUITE
