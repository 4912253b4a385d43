#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zecap/channel.hpp"
#include "zecap/graph.hpp"

namespace zecap {

// Entanglement-assisted zero-error code: k cliques of size d plus a
// d-dimensional representation with exact integer Gram data. rep[v] are the
// coordinates of vertex v's ray; inner products go through rep_gram, so
// lattice coordinates work as well as Euclidean ones.
struct ZeroErrorCode {
    Graph graph;
    CliquePartition partition;
    std::vector<std::vector<long long>> rep;
    std::vector<std::vector<long long>> rep_gram;  // dim x dim; identity if empty
    int dim = 0;

    long long rep_ip(int u, int v) const;
};

CheckResult verify_code(const ZeroErrorCode& code);

// Exhaustive zero-error check of the block-length-one protocol: for every
// (message, Alice outcome v in its cell, channel output y with N(y|v) > 0),
// the candidate set S_y = {x : N(y|x) > 0} must carry pairwise-orthogonal
// representation vectors, so Bob's measurement identifies v and hence the
// message. Throws if the confusability graph is not a subgraph of code.graph
// on the same vertices, or the code itself is invalid.
struct SimulationReport {
    int k = 0, d = 0;
    long long branches_checked = 0;
    std::vector<std::string> failures;
    double rate_bits = 0.0;
    bool zero_error() const { return failures.empty(); }
};
SimulationReport simulate_zero_error(const Channel& n, const ZeroErrorCode& code);

// Floating-point demonstration of the protocol state: Alice's outcome
// probabilities on the maximally entangled state and Bob's residual-state
// orthogonality, both within tolerance. Demonstration only; the zero-error
// claim rests on simulate_zero_error's exact arithmetic.
struct StateDemo {
    double max_outcome_prob_deviation = 0.0;  // |p - 1/d| over all outcomes
    double max_residual_overlap = 0.0;        // |<phi_x, phi_x'>| within candidate sets
};
StateDemo entangled_state_demo(const ZeroErrorCode& code);

// Kochen-Specker search: maximum number of partition cells from which one
// vertex each can be picked forming an independent set (pairwise
// non-orthogonal). Exhaustive branch-and-bound over cells in decreasing-size
// order.
struct KsReport {
    int cells_total = 0;
    int cells_satisfiable = 0;
    std::vector<std::pair<int, int>> witness;  // (cell index, chosen vertex)
};
KsReport ks_search(const Graph& g, const CliquePartition& partition);

nlohmann::json simulation_to_json(const SimulationReport& r);
nlohmann::json ks_to_json(const KsReport& r);

}  // namespace zecap
