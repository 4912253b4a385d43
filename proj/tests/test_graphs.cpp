#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zecap/cliques.hpp"
#include "zecap/graph.hpp"
#include "zecap/mis.hpp"

using namespace zecap;

TEST_CASE("strong product") {
    auto c5 = cycle_graph(5);
    auto k1 = complete_graph(1);

    auto p = strong_product(k1, c5);
    REQUIRE(p.n == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(p.adjacent(u, v) == c5.adjacent(u, v));

    auto sq = strong_product(c5, c5);
    CHECK(sq.n == 25);
    CHECK(independence_number(sq) == 5);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        int n1 = 5 + trial % 2, n2 = 6 - trial % 2;
        auto g1 = test::random_graph(rng, n1, 0.4);
        auto g2 = test::random_graph(rng, n2, 0.6);
        auto prod = strong_product(g1, g2);
        REQUIRE(prod.n == n1 * n2);
        for (int a1 = 0; a1 < n1; ++a1)
            for (int a2 = 0; a2 < n2; ++a2)
                for (int b1 = 0; b1 < n1; ++b1)
                    for (int b2 = 0; b2 < n2; ++b2) {
                        int u = a1 * n2 + a2, v = b1 * n2 + b2;
                        if (u == v) continue;
                        CHECK(prod.adjacent(u, v) ==
                              test::oracle_strong_adjacent(g1, g2, a1, a2, b1, b2));
                    }
    }
}

TEST_CASE("independent set product bound") {
    std::mt19937 rng(5);
    auto g1 = test::random_graph(rng, 6, 0.5);
    auto g2 = test::random_graph(rng, 6, 0.5);
    auto s1 = max_independent_set(g1);
    auto s2 = max_independent_set(g2);
    auto prod = strong_product(g1, g2);
    std::vector<int> s;
    for (int a : s1)
        for (int b : s2) s.push_back(a * g2.n + b);
    CHECK(is_independent_set(prod, s));
    CHECK(independence_number(prod) >= int(s1.size() * s2.size()));
}

TEST_CASE("max independent set") {
    CHECK(independence_number(cycle_graph(5)) == 2);
    for (int n : {2, 3, 5, 8}) CHECK(independence_number(complete_graph(n)) == 1);
    CHECK(independence_number(empty_graph(7)) == 7);
    CHECK(independence_number(petersen_graph()) == 4);

    auto s = max_independent_set(cycle_graph(5));
    CHECK(s.size() == 2);
    CHECK(is_independent_set(cycle_graph(5), s));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = test::random_graph(rng, 14, 0.4);
        int alpha = independence_number(g);
        CHECK(alpha == test::oracle_mis_size(g));
        auto set = max_independent_set(g);
        CHECK(int(set.size()) == alpha);
        CHECK(is_independent_set(g, set));
    }
}

TEST_CASE("search budget") {
    Graph big(250);
    CHECK_THROWS_AS(independence_number(big), SearchBudgetError);
    MisOptions opts;
    opts.budget = 300;
    CHECK(independence_number(big, opts) == 250);
}

TEST_CASE("cliques of size d") {
    CHECK(cliques_of_size(complete_graph(3), 3).size() == 1);
    CHECK(cliques_of_size(petersen_graph(), 3).empty());
    CHECK(test::oracle_triangle_count(petersen_graph()) == 0);

    std::mt19937 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = test::random_graph(rng, trial < 8 ? 16 : 20, 0.5);
        for (int d = 1; d <= 4; ++d) {
            auto got = cliques_of_size(g, d);
            auto want = test::oracle_cliques_of_size(g, d);
            CHECK(got == want);  // both canonically sorted
        }
    }
    CHECK_THROWS(cliques_of_size(complete_graph(3), 0));
}

TEST_CASE("verify clique partition") {
    auto k4 = complete_graph(4);
    CliquePartition good{{{0, 1}, {2, 3}}};
    CHECK(bool(verify_clique_partition(k4, good, 2, 2)));

    auto c4 = cycle_graph(4);  // 0-1-2-3-0; 0 and 2 are non-adjacent
    CliquePartition bad{{{0, 2}, {1, 3}}};
    auto res = verify_clique_partition(c4, bad, 2, 2);
    CHECK(!res.ok);
    CHECK(res.reason == "non-edge inside cell");

    CliquePartition wrong_k{{{0, 1, 2, 3}}};
    CHECK(!verify_clique_partition(k4, wrong_k, 2, 2).ok);
    CliquePartition missing{{{0, 1}}};
    CHECK(!verify_clique_partition(k4, missing, 1, 2).ok);
    CliquePartition overlap{{{0, 1}, {1, 2}}};
    CHECK(!verify_clique_partition(complete_graph(3), overlap, 2, 2).ok);
}

TEST_CASE("verify isomorphism map") {
    auto p = petersen_graph();
    std::vector<int> ident(10);
    for (int i = 0; i < 10; ++i) ident[size_t(i)] = i;
    CHECK(bool(verify_isomorphism_map(p, p, ident)));

    std::swap(ident[0], ident[1]);  // 0,1 adjacent on the outer cycle; swap breaks spokes
    auto res = verify_isomorphism_map(p, p, ident);
    CHECK(!res.ok);

    std::vector<int> notbij(10, 0);
    CHECK_THROWS(verify_isomorphism_map(p, p, notbij));
}

TEST_CASE("induced subgraph") {
    auto p = petersen_graph();
    std::vector<int> all(10);
    for (int i = 0; i < 10; ++i) all[size_t(i)] = i;
    auto same = induced_subgraph(p, all);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) CHECK(same.adjacent(u, v) == p.adjacent(u, v));

    auto single = induced_subgraph(p, {3});
    CHECK(single.n == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS(induced_subgraph(p, {10}));
}
