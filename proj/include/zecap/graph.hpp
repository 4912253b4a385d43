#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zecap/bits.hpp"

namespace zecap {

// Finite simple graph: unique vertex labels, symmetric bitset adjacency,
// no self-loops.
struct Graph {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<Bitset> adj;

    Graph() = default;
    explicit Graph(int n_, std::vector<std::string> labels_ = {});

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj[size_t(u)].test(v); }
    int degree(int v) const { return adj[size_t(v)].count(); }
    long long edge_count() const;
    Graph complement() const;
    std::vector<std::pair<int, int>> edges() const;  // i<j, sorted
    void check_valid() const;                        // symmetry, loops, label uniqueness
};

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();
// Kneser graph KG(n,2): vertices are 2-subsets of {1..n}, adjacent iff disjoint.
// Vertex order: {1,2},{1,3},...,{1,n},{2,3},... Labels "{i,j}".
Graph kneser_graph_2(int n);
std::vector<std::pair<int, int>> kneser_pairs(int n);

Graph strong_product(const Graph& g1, const Graph& g2);
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

bool is_independent_set(const Graph& g, const std::vector<int>& s);
bool is_clique(const Graph& g, const std::vector<int>& s);

struct CliquePartition {
    std::vector<std::vector<int>> cells;
};

// Diagnostic result: ok, or the first violated condition plus a witness.
struct CheckResult {
    bool ok = true;
    std::string reason;
    std::vector<int> witness;
    explicit operator bool() const { return ok; }
};

CheckResult verify_clique_partition(const Graph& g, const CliquePartition& p, int k, int d);
// f[v] = image of vertex v in g2; throws std::invalid_argument if f is not a
// bijection V(g1) -> V(g2).
CheckResult verify_isomorphism_map(const Graph& g1, const Graph& g2, const std::vector<int>& f);

// DIMACS edge format with labels preserved in comment lines; 1-based vertices.
std::string graph_to_dimacs(const Graph& g);
Graph graph_from_dimacs(const std::string& text);
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace zecap
