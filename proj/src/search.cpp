#include "qgiso/search.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qgiso/charpoly.hpp"
#include "qgiso/error.hpp"
#include "qgiso/graph6.hpp"
#include "qgiso/isomorphism.hpp"
#include "qgiso/spectrum.hpp"

namespace qg {

std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& source) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    out.push_back(CorpusEntry{source, no, line});
  }
  return out;
}

std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  return read_corpus(in, path);
}

std::string to_string(Normalization n) {
  return n == Normalization::total_length_one ? "total-length-1" : "native";
}

namespace {

struct Prepared {
  std::optional<CombinatorialGraph> graph;
  std::string warning;
  IntPoly char_poly;
  std::string char_key;
  std::string canonical;
  std::optional<SecularPolynomial> secular;
};

std::string poly_key(const IntPoly& p) {
  std::string s;
  for (const auto& c : p.coeffs()) {
    s += c.get_str();
    s.push_back(',');
  }
  return s;
}

std::string secular_key(const SecularPolynomial& p) {
  return to_string(p.unit) + "|" + p.denom.get_str() + "|" + poly_key(IntPoly(p.coeffs));
}

MetricGraph metric_for(const CombinatorialGraph& g, Normalization n) {
  return n == Normalization::total_length_one ? normalized_equilateral(g) : equilateral(g, Rational(1));
}

int threads(std::size_t jobs) { return static_cast<int>(std::max<std::size_t>(jobs, 1)); }

void prepare(const CorpusEntry& e, const SearchConfig& config, Prepared& p) {
  CombinatorialGraph g;
  try {
    g = parse_graph6(e.graph6);
  } catch (const Error& err) {
    p.warning = std::string("unparsable graph6: ") + err.what();
    return;
  }
  if (g.n_edges() == 0) {
    p.warning = "graph has no edges; skipped";
    return;
  }
  if (!g.is_connected()) {
    p.warning = "graph is not connected; skipped";
    return;
  }
  if (config.trees_only && !g.is_tree()) {
    p.warning = "graph is not a tree; skipped";
    return;
  }
  p.char_poly = char_poly(g);
  p.char_key = poly_key(char_poly_key(g));
  p.canonical = encode_graph6(canonical_relabel(g));
  p.graph = std::move(g);
}

}  // namespace

SearchResult search(const std::vector<CorpusEntry>& corpus, const SearchConfig& config) {
  if (config.jobs == 0) throw InvalidArgument("worker count must be at least 1");
  SearchResult result;
  result.graphs_read = corpus.size();
  std::vector<Prepared> prep(corpus.size());

  const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads(config.jobs))
  for (std::int64_t i = 0; i < n; ++i) prepare(corpus[i], config, prep[i]);

  // Buckets in key order; members in corpus order.
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < prep.size(); ++i) {
    if (!prep[i].graph) {
      result.warnings.push_back({corpus[i].source, corpus[i].line, prep[i].warning});
      continue;
    }
    ++result.graphs_used;
    buckets[config.prefilter ? prep[i].char_key : std::string()].push_back(i);
  }

  std::vector<std::size_t> todo;
  for (const auto& [key, members] : buckets)
    if (members.size() > 1) todo.insert(todo.end(), members.begin(), members.end());
  result.secular_evaluations = todo.size();

  const auto m = static_cast<std::int64_t>(todo.size());
  std::vector<std::string> errors(todo.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads(config.jobs))
  for (std::int64_t t = 0; t < m; ++t) {
    auto& p = prep[todo[t]];
    try {
      p.secular = secular_polynomial(metric_for(*p.graph, config.normalization)).reduced();
    } catch (const Error& err) {
      errors[t] = err.what();
    }
  }
  for (std::size_t t = 0; t < todo.size(); ++t)
    if (!errors[t].empty()) throw InternalError("secular polynomial failed on " + corpus[todo[t]].graph6 + ": " + errors[t]);

  for (const auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i : members) groups[secular_key(*prep[i].secular)].push_back(i);
    for (auto& [skey, group] : groups) {
      if (group.size() < 2) continue;
      std::map<std::string, std::size_t> by_canonical;
      IsospectralSet set;
      for (std::size_t i : group) {
        auto [it, fresh] = by_canonical.emplace(prep[i].canonical, i);
        if (!fresh) {
          result.warnings.push_back({corpus[i].source, corpus[i].line,
                                     "isomorphic to " + corpus[it->second].source + ":" +
                                         std::to_string(corpus[it->second].line) + "; duplicate ignored"});
        }
      }
      if (by_canonical.size() < 2) continue;
      for (const auto& [canon, i] : by_canonical) {
        set.members.push_back(SetMember{corpus[i].source, corpus[i].line, corpus[i].graph6, canon, *prep[i].graph});
        set.char_polys.push_back(prep[i].char_poly);
      }
      set.secular = *prep[group.front()].secular;
      set.char_poly_shared = std::all_of(by_canonical.begin(), by_canonical.end(), [&](const auto& kv) {
        return prep[kv.second].char_key == prep[by_canonical.begin()->second].char_key;
      });
      set.char_poly_key = char_poly_key(set.members.front().graph);
      set.prefiltered = config.prefilter;
      set.normalization = config.normalization;
      result.sets.push_back(std::move(set));
    }
  }
  std::sort(result.sets.begin(), result.sets.end(), [](const IsospectralSet& a, const IsospectralSet& b) {
    return std::pair(a.members.front().graph.n_vertices(), a.members.front().canonical) <
           std::pair(b.members.front().graph.n_vertices(), b.members.front().canonical);
  });
  std::stable_sort(result.warnings.begin(), result.warnings.end(), [](const SearchWarning& a, const SearchWarning& b) {
    return std::pair(a.source, a.line) < std::pair(b.source, b.line);
  });
  return result;
}

SearchResult tree_search(const std::vector<CorpusEntry>& corpus, SearchConfig config) {
  config.trees_only = true;
  return search(corpus, config);
}

Verification verify_sets(const std::vector<IsospectralSet>& sets) {
  Verification v;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const auto& set = sets[s];
    const std::string tag = "set " + std::to_string(s + 1) + " (" + set.members.front().graph6 + ")";
    if (set.members.size() < 2) {
      v.failures.push_back(tag + ": fewer than two members");
      continue;
    }
    std::vector<SecularPolynomial> polys;
    for (const auto& m : set.members)
      polys.push_back(secular_polynomial_reference(metric_for(m.graph, set.normalization)));
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].reduced() != set.secular)
        v.failures.push_back(tag + ": member " + set.members[i].graph6 + " has a different secular polynomial");
      for (std::size_t j = i + 1; j < polys.size(); ++j) {
        bool same = false;
        try {
          same = same_spectrum(polys[i], polys[j]);
        } catch (const IncomparableError&) {
        }
        if (!same)
          v.failures.push_back(tag + ": " + set.members[i].graph6 + " and " + set.members[j].graph6 + " are not isospectral");
        if (is_isomorphic(set.members[i].graph, set.members[j].graph))
          v.failures.push_back(tag + ": " + set.members[i].graph6 + " and " + set.members[j].graph6 + " are isomorphic");
      }
    }
  }
  v.ok = v.failures.empty();
  return v;
}

namespace {

std::vector<std::vector<std::string>> signatures(const SearchResult& r) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : r.sets) {
    std::vector<std::string> m;
    for (const auto& x : s.members) m.push_back(x.canonical);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

PrefilterAudit prefilter_soundness_audit(const std::vector<CorpusEntry>& corpus, SearchConfig config) {
  PrefilterAudit a;
  config.prefilter = true;
  a.with_prefilter = search(corpus, config);
  config.prefilter = false;
  a.without_prefilter = search(corpus, config);
  a.identical = signatures(a.with_prefilter) == signatures(a.without_prefilter);
  for (const auto& s : a.without_prefilter.sets)
    if (!s.char_poly_shared) a.char_poly_discoveries.push_back(s);
  return a;
}

Json to_json(const IsospectralSet& s) {
  Json members = Json::array();
  for (const auto& m : s.members)
    members.push_back(Json{{"graph6", m.graph6},
                           {"canonical", m.canonical},
                           {"vertices", m.graph.n_vertices()},
                           {"edges", m.graph.n_edges()},
                           {"char_poly", to_json(s.char_polys[&m - s.members.data()])},
                           {"source", m.source},
                           {"line", m.line}});
  Json j{{"size", s.members.size()}, {"members", members}};
  j["char_poly"] = s.char_poly_shared ? to_json(s.char_poly_key) : Json(nullptr);
  j["secular"] = to_json(s.secular);
  j["prefilter"] = s.prefiltered;
  j["normalization"] = to_string(s.normalization);
  return j;
}

std::string to_jsonl(const std::vector<IsospectralSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    out += to_json(s).dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<std::size_t> size_histogram(const std::vector<IsospectralSet>& sets) {
  std::vector<std::size_t> h;
  for (const auto& s : sets) {
    if (h.size() <= s.members.size()) h.resize(s.members.size() + 1, 0);
    ++h[s.members.size()];
  }
  return h;
}

}  // namespace qg
