#include "zecap/mis.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zecap {

SearchBudgetError::SearchBudgetError(int n, int budget)
    : std::runtime_error("independent-set search refused: " + std::to_string(n) +
                         " vertices exceeds budget " + std::to_string(budget) +
                         "; use certificate-based bounds instead") {}

namespace {

// Max independent set == max clique on the complement. The kernel below works
// on complement adjacency rows and returns clique sizes; greedy sequential
// coloring gives the bound, branching is lowest-color-last (Tomita order).
struct CliqueKernel {
    int n;
    std::vector<Bitset> adj;  // complement adjacency

    explicit CliqueKernel(const Graph& g) : n(g.n), adj(size_t(g.n), Bitset(g.n)) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && !g.adjacent(u, v)) adj[size_t(u)].set(v);
    }

    // Greedy coloring of candidates; returns vertices ordered by color with
    // their color numbers (1-based upper bound contribution).
    void color_sort(const Bitset& cand, std::vector<int>& order, std::vector<int>& colors) const {
        order.clear();
        colors.clear();
        Bitset uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset cls = uncolored;
            while (true) {
                int v = cls.first();
                if (v < 0) break;
                cls.reset(v);
                cls.andnot(adj[size_t(v)]);
                uncolored.reset(v);
                order.push_back(v);
                colors.push_back(color);
            }
        }
    }

    // Serial expansion; `best` may be shared across tasks (monotone max) and
    // `target` short-circuits feasibility queries (stop once reached).
    void expand(Bitset cand, int depth, std::atomic<int>& best, int target) const {
        if (!cand.any()) {
            int b = best.load(std::memory_order_relaxed);
            while (depth > b && !best.compare_exchange_weak(b, depth)) {
            }
            return;
        }
        std::vector<int> order, colors;
        color_sort(cand, order, colors);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            int bound = best.load(std::memory_order_relaxed);
            if (target > 0 && bound >= target) return;
            if (depth + colors[size_t(i)] <= bound) return;  // colors ascending in order
            int v = order[size_t(i)];
            expand(cand.intersect(adj[size_t(v)]), depth + 1, best, target);
            cand.reset(v);
        }
    }

    int solve(bool parallel, int target = 0) const {
        std::atomic<int> best{0};
        Bitset all(n);
        for (int v = 0; v < n; ++v) all.set(v);
#ifdef _OPENMP
        if (parallel && n > 32) {
            std::vector<int> order, colors;
            color_sort(all, order, colors);
#pragma omp parallel
#pragma omp single nowait
            for (int i = int(order.size()) - 1; i >= 0; --i) {
                int v = order[size_t(i)];
                int color = colors[size_t(i)];
                Bitset cand = all;
#pragma omp task firstprivate(v, color, cand)
                {
                    if (color > best.load(std::memory_order_relaxed) &&
                        (target <= 0 || best.load(std::memory_order_relaxed) < target))
                        expand(cand.intersect(adj[size_t(v)]), 1, best, target);
                }
                all.reset(v);
            }
            return best.load();
        }
#endif
        (void)parallel;
        expand(all, 0, best, target);
        return best.load();
    }
};

// Lexicographically least maximum independent set: commit vertices in index
// order whenever the remainder still admits an independent set of the right
// total size.
std::vector<int> lex_completion(const CliqueKernel& kernel, int alpha) {
    std::vector<int> chosen;
    Bitset cand(kernel.n);
    for (int v = 0; v < kernel.n; ++v) cand.set(v);
    int remaining = alpha;
    for (int v = 0; v < kernel.n && remaining > 0; ++v) {
        if (!cand.test(v)) continue;
        Bitset sub = cand.intersect(kernel.adj[size_t(v)]);
        std::atomic<int> best{0};
        kernel.expand(sub, 0, best, remaining - 1);
        if (best.load() >= remaining - 1) {
            chosen.push_back(v);
            cand = sub;
            --remaining;
        } else {
            cand.reset(v);
        }
    }
    if (remaining != 0) throw std::logic_error("lex_completion: failed to reach alpha");
    return chosen;
}

}  // namespace

int independence_number(const Graph& g, const MisOptions& opts) {
    if (g.n > opts.budget) throw SearchBudgetError(g.n, opts.budget);
    if (g.n == 0) return 0;
    return CliqueKernel(g).solve(opts.parallel);
}

std::vector<int> max_independent_set(const Graph& g, const MisOptions& opts) {
    if (g.n > opts.budget) throw SearchBudgetError(g.n, opts.budget);
    if (g.n == 0) return {};
    CliqueKernel kernel(g);
    int alpha = kernel.solve(opts.parallel);
    return lex_completion(kernel, alpha);
}

int independence_number_serial(const Graph& g) {
    if (g.n == 0) return 0;
    return CliqueKernel(g).solve(false);
}

std::vector<int> max_independent_set_serial(const Graph& g) {
    if (g.n == 0) return {};
    CliqueKernel kernel(g);
    int alpha = kernel.solve(false);
    return lex_completion(kernel, alpha);
}

bool has_independent_set(const Graph& g, int target) {
    if (target <= 0) return true;
    if (g.n == 0) return false;
    CliqueKernel kernel(g);
    return kernel.solve(false, target) >= target;
}

}  // namespace zecap
