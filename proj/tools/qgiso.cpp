// qgiso: command-line front end for the quantum-graph isospectrality library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "manifest.hpp"
#include "qgiso/constructors.hpp"
#include "qgiso/error.hpp"
#include "qgiso/graph6.hpp"
#include "qgiso/json_io.hpp"
#include "qgiso/mfunction.hpp"
#include "qgiso/search.hpp"
#include "qgiso/secular.hpp"
#include "qgiso/spectrum.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitVerification = 2;

using qg::Json;
using qg::MetricGraph;

/// Thrown by commands that ran but found a verification failure.
struct VerificationFailure {};

struct Common {
  bool json = false;
  bool native = false;
  std::string manifest;
};

std::size_t default_jobs() {
  if (const char* env = std::getenv("QGISO_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// graph6 literal, file:path[:N] (N-th graph, 1-based) or a family spec.
MetricGraph load_graph(const std::string& spec, bool native, std::vector<std::string>* files = nullptr) {
  MetricGraph g;
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::size_t index = 1;
    if (auto colon = path.rfind(':'); colon != std::string::npos && colon + 1 < path.size() &&
                                      path.find_first_not_of("0123456789", colon + 1) == std::string::npos) {
      index = std::stoul(path.substr(colon + 1));
      path = path.substr(0, colon);
    }
    auto corpus = qg::read_corpus_file(path);
    if (index == 0 || index > corpus.size())
      throw qg::InvalidArgument("'" + path + "' has " + std::to_string(corpus.size()) + " graphs, asked for #" +
                                std::to_string(index));
    if (files) files->push_back(path);
    g = qg::equilateral(qg::parse_graph6(corpus[index - 1].graph6), qg::Rational(1));
  } else if (qg::looks_like_family(spec)) {
    g = qg::build(qg::parse_family(spec));
  } else {
    g = qg::equilateral(qg::parse_graph6(spec), qg::Rational(1));
  }
  if (!native) g = g.with_total_length(qg::Rational(1));
  return g;
}

std::string pi_multiple(const qg::Rational& q) {
  if (q == 0) return "0";
  const qg::Integer num = q.get_num(), den = q.get_den();
  std::string s = num == 1 ? "" : num.get_str();
  s += "π";
  if (den != 1) s += "/" + den.get_str();
  return s;
}

void print(const Common& c, const Json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string describe(const MetricGraph& g) {
  std::ostringstream os;
  os << g.n_vertices() << " vertices, " << g.n_edges() << " edges, unit " << qg::to_string(g.unit())
     << ", total length " << qg::to_string(g.total_length());
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qg::Error("cannot write '" + path + "'");
  out << bytes;
}

std::string dot(const MetricGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (qg::Vertex v = 0; v < g.n_vertices(); ++v) os << "  " << v << ";\n";
  for (std::size_t e = 0; e < g.n_edges(); ++e)
    os << "  " << g.edges()[e].u << " -- " << g.edges()[e].v << " [label=\"" << g.length(e) << "\"];\n";
  os << "}\n";
  return os.str();
}

// ------------------------------------------------------------ commands

int cmd_secular(const Common& c, const std::string& spec, bool reference) {
  auto g = load_graph(spec, c.native);
  auto p = reference ? qg::secular_polynomial_reference(g) : qg::secular_polynomial(g);
  Json j{{"graph", qg::to_json(g)}, {"secular", qg::to_json(p)}};
  print(c, j, describe(g) + "\nz = exp(i k " + qg::to_string(p.unit) + ")\nP(z) = " + p.to_string() + "\n");
  return 0;
}

int cmd_spectrum(const Common& c, const std::string& spec, std::optional<double> kmax, std::optional<std::size_t> count) {
  if (!kmax && !count) count = 10;
  auto g = load_graph(spec, c.native);
  auto p = qg::secular_polynomial(g);
  qg::SpectrumWindow w;
  if (kmax) w.k_max = static_cast<long double>(*kmax);
  w.count = count;
  auto r = qg::eigenfrequencies(p, w);
  std::ostringstream os;
  os << describe(g) << "\n";
  os << "k = 0 (x" << r.k0_multiplicity << ")\n";
  for (const auto& e : r.entries) {
    if (e.kind == qg::Eigenfrequency::Kind::exact)
      os << "k = " << pi_multiple(e.k_over_pi);
    else
      os << "k ~ " << std::setprecision(15) << static_cast<double>(e.k) << " (root " << e.root_index << " of "
         << e.factor.to_string() << ")";
    os << " (x" << e.multiplicity << ")\n";
  }
  print(c, Json{{"graph", qg::to_json(g)}, {"spectrum", qg::to_json(r)}}, os.str());
  return 0;
}

int cmd_isospectral(const Common& c, const std::string& a, const std::string& b) {
  auto g1 = load_graph(a, c.native), g2 = load_graph(b, c.native);
  auto p1 = qg::secular_polynomial(g1), p2 = qg::secular_polynomial(g2);
  bool same = false;
  std::string reason;
  try {
    same = qg::same_spectrum(p1, p2);
  } catch (const qg::IncomparableError& e) {
    reason = e.what();
  }
  Json j{{"isospectral", same}, {"secular", Json::array({qg::to_json(p1.reduced()), qg::to_json(p2.reduced())})}};
  if (!reason.empty()) j["reason"] = reason;
  print(c, j, std::string(same ? "ISOSPECTRAL" : "NOT ISOSPECTRAL") + (reason.empty() ? "" : " (" + reason + ")") + "\n");
  return 0;
}

struct SearchArgs {
  std::vector<std::string> corpora;
  bool no_prefilter = false;
  std::size_t jobs = 0;
  std::string out;
  bool skip_verify = false;
};

std::vector<qg::CorpusEntry> load_corpora(const std::vector<std::string>& paths) {
  std::vector<qg::CorpusEntry> all;
  for (const auto& p : paths) {
    auto c = qg::read_corpus_file(p);
    all.insert(all.end(), c.begin(), c.end());
  }
  return all;
}

int cmd_search(const Common& c, const SearchArgs& a, bool trees, qgcli::RunManifest& manifest) {
  qg::SearchConfig cfg;
  cfg.prefilter = !a.no_prefilter;
  cfg.normalization = c.native ? qg::Normalization::native : qg::Normalization::total_length_one;
  cfg.jobs = a.jobs ? a.jobs : default_jobs();
  auto corpus = load_corpora(a.corpora);
  for (const auto& p : a.corpora) manifest.add_input(p);
  manifest.config() = Json{{"command", trees ? "tree-search" : "search"},
                           {"prefilter", cfg.prefilter},
                           {"normalization", qg::to_string(cfg.normalization)},
                           {"jobs", cfg.jobs}};
  auto r = trees ? qg::tree_search(corpus, cfg) : qg::search(corpus, cfg);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w.source << ":" << w.line << ": " << w.message << "\n";

  const std::string jsonl = qg::to_jsonl(r.sets);
  if (!a.out.empty()) {
    write_file(a.out, jsonl);
    manifest.add_output(a.out);
  }
  qg::Verification v;
  if (!a.skip_verify) v = qg::verify_sets(r.sets);
  for (const auto& f : v.failures) std::cerr << "verification failure: " << f << "\n";

  auto hist = qg::size_histogram(r.sets);
  Json summary{{"graphs_read", r.graphs_read},
               {"graphs_used", r.graphs_used},
               {"secular_evaluations", r.secular_evaluations},
               {"sets", r.sets.size()},
               {"sets_by_size", hist},
               {"verified", !a.skip_verify},
               {"verification_ok", v.ok}};
  if (c.json && a.out.empty()) {
    std::cout << jsonl;
  } else {
    std::ostringstream os;
    os << r.graphs_used << " of " << r.graphs_read << " graphs used, " << r.secular_evaluations
       << " secular polynomials computed\n";
    os << r.sets.size() << " isospectral sets";
    for (std::size_t k = 2; k < hist.size(); ++k)
      if (hist[k]) os << ", " << hist[k] << " of size " << k;
    os << "\n";
    if (a.out.empty())
      for (const auto& s : r.sets) {
        for (std::size_t i = 0; i < s.members.size(); ++i) os << (i ? "  " : "") << s.members[i].graph6;
        os << "\n";
      }
    print(c, summary, os.str());
  }
  manifest.config()["summary"] = summary;
  if (!v.ok) throw VerificationFailure{};
  return 0;
}

int cmd_audit(const Common& c, const SearchArgs& a, qgcli::RunManifest& manifest) {
  qg::SearchConfig cfg;
  cfg.normalization = c.native ? qg::Normalization::native : qg::Normalization::total_length_one;
  cfg.jobs = a.jobs ? a.jobs : default_jobs();
  for (const auto& p : a.corpora) manifest.add_input(p);
  manifest.config() = Json{{"command", "audit-prefilter"}, {"jobs", cfg.jobs}};
  auto audit = qg::prefilter_soundness_audit(load_corpora(a.corpora), cfg);
  Json discoveries = Json::array();
  for (const auto& s : audit.char_poly_discoveries) discoveries.push_back(qg::to_json(s));
  Json j{{"identical", audit.identical},
         {"sets_with_prefilter", audit.with_prefilter.sets.size()},
         {"sets_without_prefilter", audit.without_prefilter.sets.size()},
         {"char_poly_discoveries", discoveries}};
  std::ostringstream os;
  os << "prefilter on:  " << audit.with_prefilter.sets.size() << " sets\n"
     << "prefilter off: " << audit.without_prefilter.sets.size() << " sets\n"
     << (audit.identical ? "identical results" : "RESULTS DIFFER") << "\n";
  for (const auto& s : audit.char_poly_discoveries) {
    os << "discovery: isospectral members with different C(x):";
    for (const auto& m : s.members) os << " " << m.graph6;
    os << "\n";
  }
  print(c, j, os.str());
  manifest.config()["summary"] = j;
  return 0;
}

int cmd_msig(const Common& c, const std::string& spec, qg::Vertex v) {
  auto g = load_graph(spec, c.native);
  auto s = qg::m_signature(g, v);
  auto m = qg::m_rational(g, v);
  std::ostringstream os;
  os << describe(g) << "\nvertex " << v << ", z = exp(i k " << qg::to_string(s.unit) << ")\n"
     << "signature Q(z, w) = " << s.q.to_string() << "\n"
     << "discarded factor  = " << s.discarded.to_string() << "\n"
     << "M(k) = i k (" << m.num.to_string() << ") / (" << m.den.to_string() << ")\n";
  print(c, Json{{"signature", qg::to_json(s)}, {"m", qg::to_json(m)}}, os.str());
  return 0;
}

int cmd_same_m(const Common& c, const std::string& a, qg::Vertex va, const std::string& b, qg::Vertex vb) {
  auto [g1, g2] = qg::to_common_unit(load_graph(a, c.native), load_graph(b, c.native));
  if (g1.total_length() != g2.total_length())
    std::cerr << "warning: total lengths differ (" << qg::to_string(g1.total_length()) << " vs "
              << qg::to_string(g2.total_length()) << ")\n";
  const bool sig = qg::same_m(g1, va, g2, vb);
  const bool oracle = qg::m_rational(g1, va) == qg::m_rational(g2, vb);
  if (sig != oracle) {
    std::cerr << "signature and direct solve disagree\n";
    throw VerificationFailure{};
  }
  print(c, Json{{"same_m", sig}}, std::string(sig ? "SAME M-FUNCTION" : "DIFFERENT M-FUNCTIONS") + "\n");
  return 0;
}

int cmd_hot_classes(const Common& c, const std::vector<std::string>& specs) {
  std::vector<MetricGraph> gs;
  for (const auto& s : specs) gs.push_back(load_graph(s, c.native));
  // bring everything to one unit
  for (std::size_t i = 1; i < gs.size(); ++i) gs[0] = qg::to_common_unit(gs[0], gs[i]).first;
  for (auto& g : gs) g = qg::to_common_unit(gs[0], g).second;
  auto classes = qg::hot_classes(gs);
  Json j = Json::array();
  std::ostringstream os;
  for (const auto& cl : classes) {
    Json a = Json::array();
    for (const auto& [gi, v] : cl) {
      a.push_back(Json::array({gi, v}));
      os << " (" << gi << "," << v << ")";
    }
    os << "\n";
    j.push_back(a);
  }
  if (classes.empty()) os << "no two vertices share an M-function\n";
  print(c, Json{{"classes", j}}, os.str());
  return 0;
}

int cmd_build(const Common& c, const std::string& spec, bool as_dot) {
  auto g = qg::build(qg::parse_family(spec));
  if (as_dot) {
    std::cout << dot(g);
    return 0;
  }
  Json j{{"family", spec}, {"graph", qg::to_json(g)}};
  std::ostringstream os;
  os << describe(g) << "\n";
  for (std::size_t e = 0; e < g.n_edges(); ++e)
    os << "  " << g.edges()[e].u << " - " << g.edges()[e].v << "  length " << g.length(e) << "\n";
  if (g.graph().is_simple() && g.n_vertices() <= 62) {
    bool unit_lengths = std::all_of(g.lengths().begin(), g.lengths().end(), [](qg::Length l) { return l == 1; });
    if (unit_lengths) {
      j["graph6"] = qg::encode_graph6(g.graph());
      os << "graph6 " << qg::encode_graph6(g.graph()) << "\n";
    }
  }
  print(c, j, os.str());
  return 0;
}

std::vector<std::string> formula_suite(const std::string& family, int max) {
  std::vector<std::string> specs;
  auto want = [&](const std::string& f) { return family.empty() || family == f; };
  auto s = [](int x) { return std::to_string(x); };
  if (want("complete"))
    for (int v = 3; v <= (max ? max : 10); ++v) specs.push_back("complete:" + s(v));
  if (want("chain-of-loops") || want("ring-of-loops")) {
    const int limit = max ? max : 12;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int top) {
      if (!cur.empty()) parts.push_back(cur);
      for (int x = 1; x <= std::min(top, left); ++x) {
        cur.push_back(x);
        rec(left - x, x);
        cur.pop_back();
      }
    };
    rec(limit, limit);
    for (const auto& p : parts) {
      std::string list;
      for (std::size_t i = 0; i < p.size(); ++i) list += (i ? "," : "") + s(p[i]);
      if (want("chain-of-loops")) specs.push_back("chain-of-loops:" + list);
      if (want("ring-of-loops")) specs.push_back("ring-of-loops:" + list);
    }
  }
  if (want("pumpkin-pair"))
    for (int k = 2; k <= (max ? max : 12); ++k)
      for (int k1 = 1; k1 < k; ++k1) specs.push_back("pumpkin-pair:" + s(k1) + "," + s(k - k1) + "@1");
  if (want("pumpkin-star"))
    for (int leaves = 1; leaves <= 5; ++leaves)
      for (int k = leaves; k <= (max ? max : 12); ++k) {
        std::string list;
        for (int i = 0; i < leaves; ++i) list += (i ? "+" : "") + s(i == 0 ? k - leaves + 1 : 1);
        specs.push_back("pumpkin-star:" + list + "@1");
      }
  if (want("flower"))
    for (int petals = 1; petals <= (max ? max : 5); ++petals) specs.push_back("flower:" + s(petals) + "@1");
  if (want("pumpkin"))
    for (int d = 1; d <= (max ? max : 8); ++d) specs.push_back("pumpkin:" + s(d) + "@1");
  if (want("loop"))
    for (int l = 1; l <= (max ? max : 8); ++l) specs.push_back("loop:" + s(l));
  if (want("path"))
    for (int l = 1; l <= (max ? max : 8); ++l) specs.push_back("path:" + s(l));
  if (specs.empty() && !want("doubling")) throw qg::InvalidArgument("no closed form for family '" + family + "'");
  return specs;
}

int cmd_validate(const Common& c, const std::string& family, int max, std::size_t doubling_trials) {
  Json results = Json::array();
  std::ostringstream os;
  std::size_t failures = 0, total = 0;
  for (const auto& spec : formula_suite(family, max)) {
    auto check = qg::validate_formula(qg::parse_family(spec));
    ++total;
    if (!check.matches) ++failures;
    results.push_back(Json{{"family", spec}, {"formula", check.formula}, {"matches", check.matches}});
    if (!check.matches)
      os << "FAIL " << spec << " (" << check.formula << ")\n  computed " << check.computed.to_string()
         << "\n  expected " << check.expected.to_string() << "\n";
  }
  if (family.empty() || family == "doubling") {
    // fixed seed so reruns check the same graphs
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (std::size_t t = 0; t < doubling_trials; ++t) {
      const std::size_t n = 2 + next() % 5;
      std::vector<qg::Edge> edges;
      for (qg::Vertex v = 1; v < n; ++v) edges.push_back({static_cast<qg::Vertex>(next() % v), v});
      for (std::size_t k = next() % 4; k > 0; --k)
        edges.push_back({static_cast<qg::Vertex>(next() % n), static_cast<qg::Vertex>(next() % n)});
      std::vector<qg::Length> lengths;
      for (std::size_t e = 0; e < edges.size(); ++e) lengths.push_back(1 + static_cast<qg::Length>(next() % 3));
      MetricGraph g(qg::CombinatorialGraph(n, edges), lengths, 1);
      auto check = qg::validate_doubling(g);
      ++total;
      if (!check.matches) {
        ++failures;
        os << "FAIL doubling trial " << t << "\n";
      }
      results.push_back(Json{{"family", "doubling#" + std::to_string(t)}, {"formula", check.formula}, {"matches", check.matches}});
    }
  }
  os << (total - failures) << "/" << total << " closed forms match\n";
  print(c, Json{{"checked", total}, {"failures", failures}, {"results", results}}, os.str());
  if (failures) throw VerificationFailure{};
  return 0;
}

int cmd_replace(const Common& c, const std::string& a, const std::string& b, const std::string& piece, qg::Vertex pa,
                qg::Vertex pb) {
  // experiment: replace every edge of two equilateral graphs by the same piece
  auto g1 = load_graph(a, true), g2 = load_graph(b, true);
  auto r = load_graph(piece, true);
  auto h1 = qg::replace_edges(g1, r, pa, pb), h2 = qg::replace_edges(g2, r, pa, pb);
  bool before = false, after = false;
  try {
    before = qg::is_isospectral(g1, g2);
    after = qg::is_isospectral(h1, h2);
  } catch (const qg::IncomparableError&) {
  }
  std::ostringstream os;
  os << "before replacement: " << (before ? "ISOSPECTRAL" : "NOT ISOSPECTRAL") << "\n"
     << "after replacement:  " << (after ? "ISOSPECTRAL" : "NOT ISOSPECTRAL") << "\n";
  print(c, Json{{"isospectral_before", before}, {"isospectral_after", after}, {"graphs", Json::array({qg::to_json(h1), qg::to_json(h2)})}},
        os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra, isospectrality and M-functions of equilateral quantum graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QGISO_VERSION);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Machine-readable JSON on standard output");
    sub->add_flag("--native", common.native, "Keep native lengths instead of normalising to total length 1");
    sub->add_option("--manifest", common.manifest, "Write a run manifest to this path");
  };
  const std::string graph_help = "graph6 string, file:path[:N], or family spec such as chain-of-loops:1,1,2";

  std::string g1, g2, spec;
  std::vector<std::string> specs;
  qg::Vertex v1 = 0, v2 = 0;

  auto* secular = app.add_subcommand("secular", "Secular polynomial P(z)");
  bool reference = false;
  secular->add_option("graph", spec, graph_help)->required();
  secular->add_flag("--reference", reference, "Use the serial exact kernel");
  add_common(secular);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenfrequencies with multiplicities");
  std::optional<double> kmax;
  std::optional<std::size_t> count;
  spectrum->add_option("graph", spec, graph_help)->required();
  spectrum->add_option("--kmax", kmax, "All eigenfrequencies k <= KMAX");
  spectrum->add_option("--count", count, "The first COUNT non-zero eigenfrequencies (default 10)");
  add_common(spectrum);

  auto* iso = app.add_subcommand("isospectral", "Decide isospectrality of two graphs");
  iso->add_option("g1", g1, graph_help)->required();
  iso->add_option("g2", g2, graph_help)->required();
  add_common(iso);

  SearchArgs sargs;
  auto add_search = [&](CLI::App* sub, bool prefilter_flag) {
    sub->add_option("corpus", sargs.corpora, "graph6 files, one graph per line")->required()->check(CLI::ExistingFile);
    if (prefilter_flag) sub->add_flag("--no-prefilter", sargs.no_prefilter, "Compare every pair, not only equal C(x)");
    sub->add_option("--jobs", sargs.jobs, "Worker threads (default $QGISO_JOBS or all cores)")->check(CLI::PositiveNumber);
    add_common(sub);
  };
  auto* search = app.add_subcommand("search", "Find isospectral sets in graph6 corpora");
  add_search(search, true);
  search->add_option("--out", sargs.out, "Write the sets as JSONL to this file");
  search->add_flag("--skip-verify", sargs.skip_verify, "Skip the independent re-check of every set");
  auto* tree_search = app.add_subcommand("tree-search", "Find isospectral sets among the trees of graph6 corpora");
  add_search(tree_search, true);
  tree_search->add_option("--out", sargs.out, "Write the sets as JSONL to this file");
  tree_search->add_flag("--skip-verify", sargs.skip_verify, "Skip the independent re-check of every set");
  auto* audit = app.add_subcommand("audit-prefilter", "Run search with and without the C(x) prefilter and compare");
  add_search(audit, false);

  auto* msig = app.add_subcommand("msig", "M-function signature at a vertex");
  msig->add_option("graph", spec, graph_help)->required();
  msig->add_option("vertex", v1)->required();
  add_common(msig);

  auto* same_m = app.add_subcommand("same-m", "Compare M-functions at two vertices");
  same_m->add_option("g1", g1, graph_help)->required();
  same_m->add_option("v1", v1)->required();
  same_m->add_option("g2", g2, graph_help)->required();
  same_m->add_option("v2", v2)->required();
  add_common(same_m);

  auto* hot = app.add_subcommand("hot-classes", "Group all vertices of the given graphs by M-function");
  hot->add_option("graphs", specs, graph_help)->required();
  add_common(hot);

  auto* build = app.add_subcommand("build", "Construct a family member");
  bool as_dot = false;
  build->add_option("family", spec, "Family spec")->required();
  build->add_flag("--dot", as_dot, "Graphviz output");
  add_common(build);

  auto* validate = app.add_subcommand("validate-formulas", "Check closed-form secular polynomials");
  std::string family;
  int max = 0;
  std::size_t doubling = 30;
  validate->add_option("--family", family, "Only this family (complete, chain-of-loops, ring-of-loops, pumpkin-pair, "
                                           "pumpkin-star, flower, pumpkin, loop, path, doubling)");
  validate->add_option("--max", max, "Largest parameter to check");
  validate->add_option("--doubling-trials", doubling, "Random graphs for the doubling identity");
  add_common(validate);

  auto* replace = app.add_subcommand("replace-edges", "Experiment: replace every edge of two graphs by one piece");
  std::string piece;
  replace->add_option("g1", g1, graph_help)->required();
  replace->add_option("g2", g2, graph_help)->required();
  replace->add_option("piece", piece, graph_help)->required();
  replace->add_option("a", v1, "Piece vertex glued to the first end of each edge")->required();
  replace->add_option("b", v2, "Piece vertex glued to the second end")->required();
  add_common(replace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  qgcli::RunManifest manifest(argc, argv);
  int rc = 0;
  try {
    if (*secular) rc = cmd_secular(common, spec, reference);
    else if (*spectrum) rc = cmd_spectrum(common, spec, kmax, count);
    else if (*iso) rc = cmd_isospectral(common, g1, g2);
    else if (*search) rc = cmd_search(common, sargs, false, manifest);
    else if (*tree_search) rc = cmd_search(common, sargs, true, manifest);
    else if (*audit) rc = cmd_audit(common, sargs, manifest);
    else if (*msig) rc = cmd_msig(common, spec, v1);
    else if (*same_m) rc = cmd_same_m(common, g1, v1, g2, v2);
    else if (*hot) rc = cmd_hot_classes(common, specs);
    else if (*build) rc = cmd_build(common, spec, as_dot);
    else if (*validate) rc = cmd_validate(common, family, max, doubling);
    else if (*replace) rc = cmd_replace(common, g1, g2, piece, v1, v2);
  } catch (const VerificationFailure&) {
    rc = kExitVerification;
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 1;
  }
  std::string manifest_path = common.manifest;
  if (manifest_path.empty() && !sargs.out.empty()) manifest_path = sargs.out + ".manifest.json";
  if (!manifest_path.empty()) {
    manifest.config()["exit_code"] = rc;
    try {
      manifest.write(manifest_path);
    } catch (const qg::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (rc == 0) rc = 1;
    }
  }
  return rc;
}
