#include "zecap/protocol.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <sstream>

namespace zecap {

long long ZeroErrorCode::rep_ip(int u, int v) const {
    const auto& a = rep[size_t(u)];
    const auto& b = rep[size_t(v)];
    if (rep_gram.empty()) {
        long long s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        long long row = 0;
        for (size_t j = 0; j < b.size(); ++j) row += rep_gram[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

CheckResult verify_code(const ZeroErrorCode& code) {
    int k = int(code.partition.cells.size());
    int d = code.dim;
    auto part = verify_clique_partition(code.graph, code.partition, k, d);
    if (!part) return part;

    if (int(code.rep.size()) != code.graph.n)
        return {false, "representation does not cover all vertices", {int(code.rep.size())}};
    for (int v = 0; v < code.graph.n; ++v) {
        if (int(code.rep[size_t(v)].size()) != d)
            return {false, "representation dimension != d", {v, int(code.rep[size_t(v)].size()), d}};
        if (code.rep_ip(v, v) == 0) return {false, "zero representation vector", {v}};
    }
    for (int u = 0; u < code.graph.n; ++u)
        for (int v = u + 1; v < code.graph.n; ++v)
            if (code.graph.adjacent(u, v) && code.rep_ip(u, v) != 0)
                return {false, "edge with non-orthogonal representation", {u, v}};
    // each cell must be a complete orthogonal frame: d pairwise-orthogonal
    // nonzero vectors in dimension d
    for (size_t ci = 0; ci < code.partition.cells.size(); ++ci) {
        const auto& cell = code.partition.cells[ci];
        for (size_t a = 0; a < cell.size(); ++a)
            for (size_t b = a + 1; b < cell.size(); ++b)
                if (code.rep_ip(cell[a], cell[b]) != 0)
                    return {false, "cell is not an orthogonal frame", {int(ci), cell[a], cell[b]}};
    }
    return {};
}

SimulationReport simulate_zero_error(const Channel& n, const ZeroErrorCode& code) {
    auto codecheck = verify_code(code);
    if (!codecheck)
        throw std::invalid_argument("simulate_zero_error: invalid code: " + codecheck.reason);
    if (n.inputs != code.graph.labels)
        throw std::invalid_argument(
            "simulate_zero_error: channel inputs and code vertices differ");
    Graph conf = confusability_graph(n);
    for (auto [u, v] : conf.edges())
        if (!code.graph.adjacent(u, v))
            throw std::invalid_argument(
                "simulate_zero_error: confusability edge " + n.inputs[size_t(u)] + " ~ " +
                n.inputs[size_t(v)] + " is missing from the code graph");

    SimulationReport rep;
    rep.k = int(code.partition.cells.size());
    rep.d = code.dim;
    rep.rate_bits = std::log2(double(rep.k));

    size_t ny = n.outputs.size();
    std::vector<std::vector<int>> candidates(ny);
    for (size_t y = 0; y < ny; ++y)
        for (size_t x = 0; x < n.inputs.size(); ++x)
            if (n.probs[x][y] > Rat(0)) candidates[y].push_back(int(x));

    // Per output: candidates must be pairwise confusable and their rays
    // pairwise orthogonal; then Bob's measurement in a basis extending
    // {rep(x) : x in S_y} identifies Alice's outcome uniquely.
    std::vector<std::string> output_failure(ny);
    for (size_t y = 0; y < ny; ++y) {
        const auto& s = candidates[y];
        for (size_t a = 0; a < s.size() && output_failure[y].empty(); ++a)
            for (size_t b = a + 1; b < s.size(); ++b) {
                if (!conf.adjacent(s[a], s[b])) {
                    output_failure[y] = "candidates not pairwise confusable";
                    break;
                }
                if (code.rep_ip(s[a], s[b]) != 0) {
                    output_failure[y] = "candidates with non-orthogonal rays";
                    break;
                }
            }
    }

    for (size_t mi = 0; mi < code.partition.cells.size(); ++mi) {
        for (int v : code.partition.cells[mi]) {
            for (size_t y = 0; y < ny; ++y) {
                if (!(n.probs[size_t(v)][y] > Rat(0))) continue;
                ++rep.branches_checked;
                if (!output_failure[y].empty()) {
                    std::ostringstream os;
                    os << "message " << (mi + 1) << ", outcome " << code.graph.labels[size_t(v)]
                       << ", output " << n.outputs[y] << ": " << output_failure[y];
                    rep.failures.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

StateDemo entangled_state_demo(const ZeroErrorCode& code) {
    // Cholesky embedding of the representation Gram, then unit rays in R^d.
    int d = code.dim;
    std::vector<std::vector<double>> basis(size_t(d), std::vector<double>(size_t(d), 0.0));
    if (code.rep_gram.empty()) {
        for (int i = 0; i < d; ++i) basis[size_t(i)][size_t(i)] = 1.0;
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j <= i; ++j) {
                double s = double(code.rep_gram[size_t(i)][size_t(j)]);
                for (int t = 0; t < j; ++t) s -= basis[size_t(i)][size_t(t)] * basis[size_t(j)][size_t(t)];
                basis[size_t(i)][size_t(j)] = (i == j) ? std::sqrt(s) : s / basis[size_t(j)][size_t(j)];
            }
    }
    auto embed = [&](int v) {
        std::vector<double> out(size_t(d), 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                out[size_t(j)] += double(code.rep[size_t(v)][size_t(i)]) * basis[size_t(i)][size_t(j)];
        double norm = std::sqrt(double(code.rep_ip(v, v)));
        for (auto& x : out) x /= norm;
        return out;
    };

    StateDemo demo;
    for (const auto& cell : code.partition.cells) {
        std::vector<std::vector<double>> phi;
        for (int v : cell) phi.push_back(embed(v));
        // Alice measures her half of the rank-d maximally entangled state in
        // the frame {phi_v}: outcome probability <psi|(P_v x I)|psi> = |phi_v|^2/d
        for (const auto& p : phi) {
            double norm2 = 0;
            for (double x : p) norm2 += x * x;
            demo.max_outcome_prob_deviation =
                std::max(demo.max_outcome_prob_deviation, std::abs(norm2 / d - 1.0 / d));
        }
        // Bob's residual state after outcome v is phi_v (real vectors);
        // distinct outcomes in a cell must stay orthogonal
        for (size_t a = 0; a < phi.size(); ++a)
            for (size_t b = a + 1; b < phi.size(); ++b) {
                double ip = 0;
                for (int i = 0; i < d; ++i) ip += phi[a][size_t(i)] * phi[b][size_t(i)];
                demo.max_residual_overlap = std::max(demo.max_residual_overlap, std::abs(ip));
            }
    }
    return demo;
}

KsReport ks_search(const Graph& g, const CliquePartition& partition) {
    KsReport rep;
    rep.cells_total = int(partition.cells.size());

    // cells in decreasing-size order (stable, so equal sizes keep input order)
    std::vector<int> cell_order(partition.cells.size());
    for (size_t i = 0; i < cell_order.size(); ++i) cell_order[i] = int(i);
    std::stable_sort(cell_order.begin(), cell_order.end(), [&](int a, int b) {
        return partition.cells[size_t(a)].size() > partition.cells[size_t(b)].size();
    });

    std::vector<std::pair<int, int>> current, best;
    std::vector<int> chosen;

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (current.size() + (cell_order.size() - pos) <= best.size()) return;  // bound
        if (pos == cell_order.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        int ci = cell_order[pos];
        for (int v : partition.cells[size_t(ci)]) {
            bool compatible = true;
            for (int u : chosen)
                if (g.adjacent(u, v)) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            chosen.push_back(v);
            current.emplace_back(ci, v);
            rec(pos + 1);
            current.pop_back();
            chosen.pop_back();
        }
        rec(pos + 1);  // skip this cell
    };
    rec(0);

    rep.cells_satisfiable = int(best.size());
    std::sort(best.begin(), best.end());
    rep.witness = std::move(best);
    return rep;
}

nlohmann::json simulation_to_json(const SimulationReport& r) {
    return {{"k", r.k},
            {"d", r.d},
            {"branches_checked", r.branches_checked},
            {"failures", r.failures},
            {"rate_bits", r.rate_bits}};
}

nlohmann::json ks_to_json(const KsReport& r) {
    nlohmann::json witness = nlohmann::json::array();
    for (auto [cell, v] : r.witness) witness.push_back({{"cell", cell}, {"vertex", v}});
    return {{"cells_total", r.cells_total},
            {"cells_satisfiable", r.cells_satisfiable},
            {"witness_assignment", witness}};
}

}  // namespace zecap
