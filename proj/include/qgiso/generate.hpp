#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qg {

/// All connected simple graphs on n vertices up to isomorphism, as canonical
/// graph6 strings in ascending order (1 <= n <= 10). Built from the
/// (n-1)-vertex graphs by adding a vertex joined to a non-empty subset;
/// every connected graph has a non-cut vertex, so nothing is missed.
std::vector<std::string> connected_graphs(std::size_t n, std::size_t jobs = 1);

/// All trees on n vertices up to isomorphism, canonical graph6, ascending.
std::vector<std::string> trees(std::size_t n);

}  // namespace qg
