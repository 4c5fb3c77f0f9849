#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "qgiso/graph.hpp"
#include "qgiso/json_io.hpp"
#include "qgiso/poly.hpp"
#include "qgiso/secular.hpp"

namespace qg {

/// One graph6 line of a corpus, with where it came from.
struct CorpusEntry {
  std::string source;
  std::size_t line = 0;
  std::string graph6;
};

std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& source);
std::vector<CorpusEntry> read_corpus_file(const std::string& path);

enum class Normalization {
  total_length_one,  // every edge 1/E
  native,            // every edge 1
};

struct SearchConfig {
  bool prefilter = true;
  Normalization normalization = Normalization::total_length_one;
  std::size_t jobs = 1;
  /// Inputs that are not trees are skipped with a warning.
  bool trees_only = false;
};

struct SetMember {
  std::string source;
  std::size_t line = 0;
  std::string graph6;
  /// graph6 of the canonical relabelling; members are sorted by it.
  std::string canonical;
  CombinatorialGraph graph;
};

struct IsospectralSet {
  std::vector<SetMember> members;
  /// Shared secular polynomial in its reduced (coarsest-unit) form.
  SecularPolynomial secular;
  /// C(x) of each member, in member order.
  std::vector<IntPoly> char_polys;
  /// All members have the same C(x) up to a constant factor.
  bool char_poly_shared = true;
  /// The common C(x) up to scale (that of the first member if not shared).
  IntPoly char_poly_key;
  /// Found with the char-poly prefilter on.
  bool prefiltered = true;
  Normalization normalization = Normalization::total_length_one;
};

struct SearchWarning {
  std::string source;
  std::size_t line = 0;
  std::string message;
};

struct SearchResult {
  std::vector<IsospectralSet> sets;
  std::vector<SearchWarning> warnings;
  std::size_t graphs_read = 0;
  std::size_t graphs_used = 0;
  /// Secular polynomials actually computed.
  std::size_t secular_evaluations = 0;
};

/// parse -> connectivity check -> equilateral metric -> bucket by char-poly
/// (prefilter on) -> group by exact secular polynomial -> drop singletons
/// and isomorphic duplicates. Sets come out sorted by (vertex count,
/// smallest canonical member); the result does not depend on `jobs`.
SearchResult search(const std::vector<CorpusEntry>& corpus, const SearchConfig& config);
SearchResult tree_search(const std::vector<CorpusEntry>& corpus, SearchConfig config);

/// Independent re-check of every set: pairwise same spectrum through the
/// serial reference kernel and pairwise non-isomorphism.
struct Verification {
  bool ok = true;
  std::vector<std::string> failures;
};
Verification verify_sets(const std::vector<IsospectralSet>& sets);

struct PrefilterAudit {
  SearchResult with_prefilter;
  SearchResult without_prefilter;
  /// Same sets (by member encodings) in both modes.
  bool identical = false;
  /// Sets found without the prefilter whose members differ in char-poly.
  std::vector<IsospectralSet> char_poly_discoveries;
};
PrefilterAudit prefilter_soundness_audit(const std::vector<CorpusEntry>& corpus, SearchConfig config);

std::string to_string(Normalization n);
Json to_json(const IsospectralSet& s);
/// One set per line, newline-terminated.
std::string to_jsonl(const std::vector<IsospectralSet>& sets);

/// Counts of sets by size: result[k] = number of sets with k members.
std::vector<std::size_t> size_histogram(const std::vector<IsospectralSet>& sets);

}  // namespace qg
