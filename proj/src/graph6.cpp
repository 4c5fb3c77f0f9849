#include "qgiso/graph6.hpp"

#include <fstream>

#include "qgiso/error.hpp"

namespace qg {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

CombinatorialGraph parse_graph6(std::string_view text) {
  std::size_t start = 0;
  if (text.substr(0, kHeader.size()) == kHeader) start = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (start >= text.size()) throw ParseError("empty graph6 string", start);

  const int head = static_cast<unsigned char>(text[start]);
  if (head == 126) throw UnsupportedError("graph6 graphs with more than 62 vertices are not supported");
  if (head < kBias || head > 126) throw ParseError("invalid graph6 size byte", start);
  const std::size_t n = static_cast<std::size_t>(head - kBias);
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::size_t body = start + 1;
  if (text.size() - body != nbytes)
    throw ParseError("graph6 body has " + std::to_string(text.size() - body) + " bytes, expected " +
                         std::to_string(nbytes),
                     text.size() - body < nbytes ? text.size() : body + nbytes);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t pos = body + bit / 6;
      const int byte = static_cast<unsigned char>(text[pos]);
      if (byte < kBias || byte > 126) throw ParseError("invalid graph6 data byte", pos);
      if ((byte - kBias) >> (5 - bit % 6) & 1) edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  // Validate the padding bits and any bytes not touched above.
  for (std::size_t pos = body; pos < body + nbytes; ++pos) {
    const int byte = static_cast<unsigned char>(text[pos]);
    if (byte < kBias || byte > 126) throw ParseError("invalid graph6 data byte", pos);
  }
  if (nbits % 6 != 0) {
    const std::size_t pos = body + nbytes - 1;
    const int pad_mask = (1 << (6 - nbits % 6)) - 1;
    if (((static_cast<unsigned char>(text[pos]) - kBias) & pad_mask) != 0)
      throw ParseError("nonzero graph6 padding bits", pos);
  }
  return CombinatorialGraph(n, std::move(edges));
}

std::string encode_graph6(const CombinatorialGraph& g) {
  const std::size_t n = g.n_vertices();
  if (n > 62) throw UnsupportedError("graph6 encoding supports at most 62 vertices");
  if (!g.is_simple()) throw UnsupportedError("graph6 encodes simple graphs only");
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> bits(nbits, 0);
  for (const auto& e : g.edges()) {
    const std::size_t i = std::min(e.u, e.v), j = std::max(e.u, e.v);
    bits[j * (j - 1) / 2 + i] = 1;
  }
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  for (std::size_t k = 0; k < nbits; k += 6) {
    int v = 0;
    for (std::size_t b = 0; b < 6; ++b) v = (v << 1) | (k + b < nbits ? bits[k + b] : 0);
    out.push_back(static_cast<char>(v + kBias));
  }
  return out;
}

std::vector<CombinatorialGraph> read_graph6_stream(std::istream& in) {
  std::vector<CombinatorialGraph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kHeader) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

std::vector<CombinatorialGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph6 file '" + path + "'");
  return read_graph6_stream(in);
}

}  // namespace qg
