#include "zecap/cliques.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zecap {

namespace {

struct BronKerbosch {
    const Graph& g;
    std::vector<std::vector<int>>& out;

    // pivot: vertex of P|X with most neighbours in P (lowest index on ties)
    int choose_pivot(const Bitset& p, const Bitset& x) const {
        int best = -1, best_cnt = -1;
        auto consider = [&](int u) {
            int c = p.intersect(g.adj[size_t(u)]).count();
            if (c > best_cnt) {
                best_cnt = c;
                best = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        return best;
    }

    void run(std::vector<int>& r, Bitset p, Bitset x) {
        if (!p.any() && !x.any()) {
            out.push_back(r);
            return;
        }
        int u = choose_pivot(p, x);
        Bitset ext = p;
        ext.andnot(g.adj[size_t(u)]);
        for (int v : ext.to_vector()) {
            r.push_back(v);
            run(r, p.intersect(g.adj[size_t(v)]), x.intersect(g.adj[size_t(v)]));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

std::vector<std::vector<int>> bron_kerbosch(const Graph& g, bool parallel) {
    std::vector<std::vector<int>> out;
    if (g.n == 0) return out;
    Bitset p(g.n);
    for (int v = 0; v < g.n; ++v) p.set(v);

#ifdef _OPENMP
    if (parallel && g.n > 32) {
        // split on the top level; each task gets its own output bucket
        BronKerbosch probe{g, out};
        int u = probe.choose_pivot(p, Bitset(g.n));
        Bitset ext = p;
        ext.andnot(g.adj[size_t(u)]);
        std::vector<int> branch = ext.to_vector();
        std::vector<std::vector<std::vector<int>>> buckets(branch.size());
        Bitset x(g.n);
#pragma omp parallel
#pragma omp single nowait
        for (size_t i = 0; i < branch.size(); ++i) {
            int v = branch[i];
            Bitset pv = p.intersect(g.adj[size_t(v)]);
            Bitset xv = x.intersect(g.adj[size_t(v)]);
#pragma omp task firstprivate(i, v, pv, xv)
            {
                BronKerbosch bk{g, buckets[i]};
                std::vector<int> r{v};
                bk.run(r, pv, xv);
            }
            p.reset(v);
            x.set(v);
        }
        for (auto& b : buckets)
            for (auto& c : b) out.push_back(std::move(c));
    } else
#endif
    {
        (void)parallel;
        BronKerbosch bk{g, out};
        std::vector<int> r;
        bk.run(r, p, Bitset(g.n));
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, bool parallel) {
    return bron_kerbosch(g, parallel);
}

std::vector<std::vector<int>> maximal_cliques_serial(const Graph& g) {
    return bron_kerbosch(g, false);
}

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int d, bool parallel) {
    if (d < 1) throw std::invalid_argument("cliques_of_size: d must be >= 1");
    auto maximal = bron_kerbosch(g, parallel);
    std::vector<std::vector<int>> out;
    std::vector<int> subset(static_cast<size_t>(d));
    for (const auto& c : maximal) {
        int s = int(c.size());
        if (s < d) continue;
        // all d-subsets of a sorted maximal clique, in lexicographic order
        std::vector<int> idx(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) idx[size_t(i)] = i;
        while (true) {
            for (int i = 0; i < d; ++i) subset[size_t(i)] = c[size_t(idx[size_t(i)])];
            out.push_back(subset);
            int i = d - 1;
            while (i >= 0 && idx[size_t(i)] == s - d + i) --i;
            if (i < 0) break;
            ++idx[size_t(i)];
            for (int j = i + 1; j < d; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<int>> cliques_of_size_serial(const Graph& g, int d) {
    return cliques_of_size(g, d, false);
}

}  // namespace zecap
