#pragma once

#include <vector>

#include "zecap/graph.hpp"

namespace zecap {

// All maximal cliques (Bron-Kerbosch with pivoting), sorted lexicographically
// by their sorted vertex lists.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, bool parallel = true);
std::vector<std::vector<int>> maximal_cliques_serial(const Graph& g);

// All cliques of exactly d vertices: maximal cliques are enumerated, then
// expanded into d-subsets and deduplicated. Canonical order as above.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int d, bool parallel = true);
std::vector<std::vector<int>> cliques_of_size_serial(const Graph& g, int d);

}  // namespace zecap
