#include <random>

#include "doctest.h"
#include "zecap/channel.hpp"
#include "zecap/graph.hpp"
#include "zecap/symplectic.hpp"

using namespace zecap;

TEST_CASE("confusability graph") {
    auto ident = identity_channel(4);
    CHECK(confusability_graph(ident).edge_count() == 0);

    // one output column that every input hits
    std::vector<std::vector<Rat>> p(3, {Rat(1, 2), Rat(1, 2)});
    p[0] = {Rat(1), Rat(0)};
    p[1] = {Rat(1, 2), Rat(1, 2)};
    p[2] = {Rat(1, 4), Rat(3, 4)};
    Channel shared({"a", "b", "c"}, {"y0", "y1"}, p);
    auto g = confusability_graph(shared);
    CHECK(g.edge_count() == 3);  // complete on 3 vertices

    auto pentagon = noisy_cycle_channel(5);
    auto pg = confusability_graph(pentagon);
    auto c5 = cycle_graph(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(pg.adjacent(u, v) == c5.adjacent(u, v));
}

TEST_CASE("channel validation") {
    CHECK_THROWS(Channel({"a"}, {"y"}, {{Rat(1, 2)}}));            // row sum != 1
    CHECK_THROWS(Channel({"a"}, {"y", "z"}, {{Rat(2), Rat(-1)}}));  // negative entry
}

TEST_CASE("tensor channels") {
    auto n1 = noisy_cycle_channel(3);
    auto n2 = identity_channel(2);
    auto t = tensor_channels(n1, n2);
    CHECK(t.inputs.size() == 6);
    CHECK(t.outputs.size() == 6);
    t.check_valid();  // rows still sum to exactly 1

    auto ii = tensor_channels(identity_channel(2), identity_channel(3));
    auto gi = confusability_graph(ii);
    CHECK(gi.edge_count() == 0);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        // random small channels with exact rational rows
        auto mk = [&](int nx, int ny) {
            std::uniform_int_distribution<int> weight(0, 3);
            std::vector<std::string> in, out;
            for (int i = 0; i < nx; ++i) in.push_back("x" + std::to_string(i));
            for (int i = 0; i < ny; ++i) out.push_back("y" + std::to_string(i));
            std::vector<std::vector<Rat>> p(static_cast<size_t>(nx), std::vector<Rat>(static_cast<size_t>(ny)));
            for (int x = 0; x < nx; ++x) {
                long long tot = 0;
                std::vector<long long> w(static_cast<size_t>(ny));
                for (int y = 0; y < ny; ++y) tot += (w[size_t(y)] = weight(rng));
                if (!tot) {
                    w[0] = 1;
                    tot = 1;
                }
                for (int y = 0; y < ny; ++y) p[size_t(x)][size_t(y)] = Rat(w[size_t(y)], tot);
            }
            return Channel(in, out, p);
        };
        auto a = mk(4, 4), b = mk(3, 5);
        auto lhs = confusability_graph(tensor_channels(a, b));
        auto rhs = strong_product(confusability_graph(a), confusability_graph(b));
        std::vector<int> ident_map(static_cast<size_t>(lhs.n));
        for (int i = 0; i < lhs.n; ++i) ident_map[size_t(i)] = i;
        CHECK(bool(verify_isomorphism_map(lhs, rhs, ident_map)));
    }
}

TEST_CASE("channel from cliques") {
    // disjoint union of 3 triangles
    Graph g(9);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) g.add_edge(3 * c + i, 3 * c + j);
    auto cc = channel_from_cliques(g, 3);
    CHECK(cc.report.num_outputs == 3);
    CHECK(cc.report.cliques_per_vertex == 1);
    CHECK(cc.report.double_count_ok);
    CHECK(cc.report.capacity_log2 == doctest::Approx(std::log2(3.0)));

    // sp6 with d = 7
    auto sp6 = build_sp_graph(3);
    auto sc = channel_from_cliques(sp6.graph, 7);
    CHECK(sc.report.num_outputs == 135);
    CHECK(sc.report.cliques_per_vertex == 15);
    CHECK(sc.report.double_count_ok);
    CHECK(sc.report.num_outputs * 7 == 63 * sc.report.cliques_per_vertex);
    CHECK(sc.report.capacity_log2 == doctest::Approx(std::log2(9.0)));
    sc.channel.check_valid();

    // irregular incidence: path 0-1-2 with d=2
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS(channel_from_cliques(path, 2));
    // vertex in no clique: isolated vertex with d=2
    Graph iso(3);
    iso.add_edge(0, 1);
    CHECK_THROWS(channel_from_cliques(iso, 2));
}

TEST_CASE("blahut-arimoto") {
    auto binary = identity_channel(2);
    auto r1 = blahut_arimoto(binary, 1e-9);
    CHECK(r1.capacity_bits == doctest::Approx(1.0).epsilon(1e-9));

    // identical rows carry no information
    Channel flat({"a", "b"}, {"y0", "y1"}, {{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}});
    auto r0 = blahut_arimoto(flat, 1e-9);
    CHECK(r0.capacity_bits == doctest::Approx(0.0).epsilon(1e-9));

    auto sp6 = build_sp_graph(3);
    auto sc = channel_from_cliques(sp6.graph, 7);
    auto rb = blahut_arimoto(sc.channel, 1e-6);
    CHECK(std::abs(rb.capacity_bits - std::log2(9.0)) < 1e-4);

    // monotone lower bounds on a channel that needs several iterations
    Channel skew({"a", "b", "c"}, {"y0", "y1"},
                 {{Rat(3, 4), Rat(1, 4)}, {Rat(1, 4), Rat(3, 4)}, {Rat(1, 2), Rat(1, 2)}});
    auto rs = blahut_arimoto(skew, 1e-10);
    for (size_t i = 1; i < rs.lower_history.size(); ++i)
        CHECK(rs.lower_history[i] + 1e-12 >= rs.lower_history[i - 1]);
    CHECK(rs.iterations > 1);

    CHECK_THROWS_AS(blahut_arimoto(skew, 1e-12, 2), BaCapacityError);
    CHECK_THROWS(blahut_arimoto(binary, 0.0));
}
