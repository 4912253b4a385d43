#include "zecap/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zecap {

Graph::Graph(int n_, std::vector<std::string> labels_) : n(n_) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (labels_.empty()) {
        labels.reserve(size_t(n_));
        for (int i = 0; i < n_; ++i) labels.push_back("v" + std::to_string(i));
    } else {
        if (int(labels_.size()) != n_) throw std::invalid_argument("Graph: label count mismatch");
        labels = std::move(labels_);
    }
    adj.assign(size_t(n_), Bitset(n_));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    adj[size_t(u)].set(v);
    adj[size_t(v)].set(u);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

Graph Graph::complement() const {
    Graph c(n, labels);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        adj[size_t(u)].for_each([&](int v) {
            if (v > u) e.emplace_back(u, v);
        });
    return e;
}

void Graph::check_valid() const {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw std::invalid_argument("Graph: duplicate label " + l);
    for (int u = 0; u < n; ++u) {
        if (adj[size_t(u)].test(u)) throw std::invalid_argument("Graph: self-loop");
        for (int v = 0; v < n; ++v)
            if (adj[size_t(u)].test(v) != adj[size_t(v)].test(u))
                throw std::invalid_argument("Graph: asymmetric adjacency");
    }
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

std::vector<std::pair<int, int>> kneser_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

Graph kneser_graph_2(int n) {
    auto pairs = kneser_pairs(n);
    std::vector<std::string> labels;
    for (auto [i, j] : pairs)
        labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    Graph g(int(pairs.size()), labels);
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i != k && i != l && j != k && j != l) g.add_edge(int(a), int(b));
        }
    return g;
}

Graph strong_product(const Graph& g1, const Graph& g2) {
    std::vector<std::string> labels;
    labels.reserve(size_t(g1.n) * size_t(g2.n));
    for (int a = 0; a < g1.n; ++a)
        for (int b = 0; b < g2.n; ++b)
            labels.push_back("(" + g1.labels[size_t(a)] + "," + g2.labels[size_t(b)] + ")");
    Graph p(g1.n * g2.n, labels);
    for (int a1 = 0; a1 < g1.n; ++a1)
        for (int a2 = 0; a2 < g2.n; ++a2) {
            int u = a1 * g2.n + a2;
            for (int b1 = 0; b1 < g1.n; ++b1) {
                if (b1 != a1 && !g1.adjacent(a1, b1)) continue;
                for (int b2 = 0; b2 < g2.n; ++b2) {
                    int v = b1 * g2.n + b2;
                    if (v <= u) continue;
                    if (b2 != a2 && !g2.adjacent(a2, b2)) continue;
                    p.add_edge(u, v);
                }
            }
        }
    return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<std::string> labels;
    for (int v : s) {
        if (v < 0 || v >= g.n) throw std::out_of_range("induced_subgraph: vertex not in graph");
        labels.push_back(g.labels[size_t(v)]);
    }
    Graph h(int(s.size()), labels);
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (g.adjacent(s[a], s[b])) h.add_edge(int(a), int(b));
    return h;
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || g.adjacent(s[a], s[b])) return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || !g.adjacent(s[a], s[b])) return false;
    return true;
}

CheckResult verify_clique_partition(const Graph& g, const CliquePartition& p, int k, int d) {
    if (int(p.cells.size()) != k)
        return {false, "cell count != k", {int(p.cells.size()), k}};
    std::vector<int> covered(size_t(g.n), 0);
    for (size_t ci = 0; ci < p.cells.size(); ++ci) {
        const auto& cell = p.cells[ci];
        if (int(cell.size()) != d)
            return {false, "cell size != d", {int(ci), int(cell.size()), d}};
        for (int v : cell) {
            if (v < 0 || v >= g.n) return {false, "vertex out of range", {int(ci), v}};
            if (covered[size_t(v)]++) return {false, "cells not disjoint", {int(ci), v}};
        }
        for (size_t a = 0; a < cell.size(); ++a)
            for (size_t b = a + 1; b < cell.size(); ++b)
                if (!g.adjacent(cell[a], cell[b]))
                    return {false, "non-edge inside cell", {int(ci), cell[a], cell[b]}};
    }
    for (int v = 0; v < g.n; ++v)
        if (!covered[size_t(v)]) return {false, "vertex not covered", {v}};
    return {};
}

CheckResult verify_isomorphism_map(const Graph& g1, const Graph& g2, const std::vector<int>& f) {
    if (int(f.size()) != g1.n || g1.n != g2.n)
        throw std::invalid_argument("verify_isomorphism_map: map must be total on equal vertex sets");
    std::vector<int> hit(size_t(g2.n), 0);
    for (int v : f) {
        if (v < 0 || v >= g2.n || hit[size_t(v)]++)
            throw std::invalid_argument("verify_isomorphism_map: map is not a bijection");
    }
    for (int u = 0; u < g1.n; ++u)
        for (int v = u + 1; v < g1.n; ++v)
            if (g1.adjacent(u, v) != g2.adjacent(f[size_t(u)], f[size_t(v)]))
                return {false, g1.adjacent(u, v) ? "edge not preserved" : "non-edge not preserved",
                        {u, v}};
    return {};
}

std::string graph_to_dimacs(const Graph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.n; ++v) os << "c label " << (v + 1) << " " << g.labels[size_t(v)] << "\n";
    auto e = g.edges();
    os << "p edge " << g.n << " " << e.size() << "\n";
    for (auto [u, v] : e) os << "e " << (u + 1) << " " << (v + 1) << "\n";
    return os.str();
}

Graph graph_from_dimacs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> labels;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") {
            std::string what;
            ls >> what;
            if (what == "label") {
                int idx;
                ls >> idx;
                std::string lab;
                std::getline(ls, lab);
                if (!lab.empty() && lab[0] == ' ') lab.erase(0, 1);
                labels.emplace_back(idx - 1, lab);
            }
        } else if (tag == "p") {
            std::string fmt;
            long long m;
            ls >> fmt >> n >> m;
        } else if (tag == "e") {
            int u, v;
            ls >> u >> v;
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0) throw std::invalid_argument("graph_from_dimacs: missing problem line");
    std::vector<std::string> labs;
    if (!labels.empty()) {
        labs.assign(size_t(n), "");
        for (auto& [i, l] : labels) labs[size_t(i)] = l;
    }
    Graph g(n, labs);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.check_valid();
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["labels"] = g.labels;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>(), j.at("labels").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    g.check_valid();
    return g;
}

}  // namespace zecap
