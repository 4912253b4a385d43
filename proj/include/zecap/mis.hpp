#pragma once

#include <stdexcept>
#include <vector>

#include "zecap/graph.hpp"

namespace zecap {

struct SearchBudgetError : std::runtime_error {
    explicit SearchBudgetError(int n, int budget);
};

struct MisOptions {
    int budget = 200;      // refuse searches above this vertex count
    bool parallel = true;  // OpenMP kernel; result independent of thread count
};

// Independence number by branch-and-bound (greedy-coloring bound on the
// complement's clique search, lowest-index branching).
int independence_number(const Graph& g, const MisOptions& opts = {});

// The lexicographically least maximum independent set. Deterministic
// regardless of thread count: the size is a pure max-reduction and the set is
// completed by sequential feasibility queries.
std::vector<int> max_independent_set(const Graph& g, const MisOptions& opts = {});

// Serial reference kernels, kept for testing and benchmarks.
int independence_number_serial(const Graph& g);
std::vector<int> max_independent_set_serial(const Graph& g);

// True iff g has an independent set of size >= target.
bool has_independent_set(const Graph& g, int target);

}  // namespace zecap
