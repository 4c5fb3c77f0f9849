#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qgiso/graph.hpp"

namespace qg {

/// Decodes one graph6 line (n <= 62). Edges come out in bit order:
/// (0,1), (0,2), (1,2), (0,3), ... with the smaller endpoint first.
CombinatorialGraph parse_graph6(std::string_view text);

/// Encodes a simple graph; throws UnsupportedError for multigraphs or n > 62.
std::string encode_graph6(const CombinatorialGraph& g);

/// Reads every graph of a graph6 stream, skipping blank lines and the
/// optional ">>graph6<<" header. Parse errors carry the line number.
std::vector<CombinatorialGraph> read_graph6_stream(std::istream& in);
std::vector<CombinatorialGraph> read_graph6_file(const std::string& path);

}  // namespace qg
