// The OpenMP kernels must agree with the serial reference implementations and
// give thread-count-independent results.

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zecap/cliques.hpp"
#include "zecap/mis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zecap;

TEST_CASE("parallel MIS matches the serial reference") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 40 + (trial % 4) * 10;
        double p = 0.3 + 0.15 * (trial % 3);
        auto g = test::random_graph(rng, n, p);

        int serial = independence_number_serial(g);
        MisOptions par;
        CHECK(independence_number(g, par) == serial);
        CHECK(max_independent_set(g, par) == max_independent_set_serial(g));
    }
}

TEST_CASE("feasibility query agrees with alpha") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = test::random_graph(rng, 30, 0.4);
        int alpha = independence_number_serial(g);
        CHECK(has_independent_set(g, alpha));
        CHECK(!has_independent_set(g, alpha + 1));
    }
}

TEST_CASE("parallel clique enumeration matches serial") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = test::random_graph(rng, 45, 0.5);
        CHECK(maximal_cliques(g) == maximal_cliques_serial(g));
        for (int d : {2, 3, 4}) CHECK(cliques_of_size(g, d) == cliques_of_size_serial(g, d));
    }
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
    std::mt19937 rng(777);
    auto g = test::random_graph(rng, 60, 0.45);
    int saved = omp_get_max_threads();

    omp_set_num_threads(1);
    int a1 = independence_number(g);
    auto s1 = max_independent_set(g);
    auto c1 = maximal_cliques(g);

    omp_set_num_threads(std::max(2, saved));
    int a2 = independence_number(g);
    auto s2 = max_independent_set(g);
    auto c2 = maximal_cliques(g);

    omp_set_num_threads(saved);
    CHECK(a1 == a2);
    CHECK(s1 == s2);
    CHECK(c1 == c2);
}
#endif
