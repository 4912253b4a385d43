#include "doctest.h"
#include "zecap/field.hpp"
#include "zecap/mis.hpp"
#include "zecap/root_systems.hpp"

using namespace zecap;

namespace {
long long idot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
}  // namespace

TEST_CASE("ray counts") {
    CHECK(build_root_graph(RootFamily::A, 3).rays.size() == 6);
    for (int n = 2; n <= 8; ++n)
        CHECK(int(build_root_graph(RootFamily::B, n).rays.size()) == n * n);
    for (int n = 4; n <= 8; ++n)
        CHECK(int(build_root_graph(RootFamily::D, n).rays.size()) == n * (n - 1));
    CHECK(build_root_graph(RootFamily::G2).rays.size() == 6);
    CHECK(build_root_graph(RootFamily::E8).rays.size() == 120);
    CHECK_THROWS(build_root_graph(RootFamily::A, 0));
    CHECK_THROWS(build_root_graph(RootFamily::D, 3));
    CHECK_THROWS(build_root_graph(RootFamily::B, 9));
}

TEST_CASE("adjacency is exact orthogonality") {
    auto e8 = build_root_graph(RootFamily::E8);
    for (size_t i = 0; i < e8.rays.size(); i += 7)
        for (size_t j = i + 1; j < e8.rays.size(); j += 5)
            CHECK(e8.graph.adjacent(int(i), int(j)) == (idot(e8.rays[i], e8.rays[j]) == 0));
    // every E8 ray is orthogonal to exactly 63 others
    for (int v = 0; v < e8.graph.n; ++v) CHECK(e8.graph.degree(v) == 63);
}

TEST_CASE("G2") {
    auto g2 = build_root_graph(RootFamily::G2);
    CHECK(g2.graph.n == 6);
    CHECK(g2.graph.edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(g2.graph.degree(v) == 1);  // 3 disjoint edges
    CHECK(independence_number(g2.graph) == 3);
}

TEST_CASE("B_n partitions") {
    for (int n = 2; n <= 6; ++n) {
        auto bg = build_root_graph(RootFamily::B, n);
        auto part = bn_partition(n);
        CHECK(bool(verify_clique_partition(bg.graph, part, n, n)));
        CHECK(independence_number(bg.graph) == n);
    }
    // even case: pi_n is the unit-vector cell
    auto bg4 = build_root_graph(RootFamily::B, 4);
    auto part4 = bn_partition(4);
    const auto& last = part4.cells.back();
    REQUIRE(last.size() == 4);
    for (int v : last) {
        long long nonzero = 0;
        for (long long x : bg4.rays[size_t(v)]) nonzero += (x != 0);
        CHECK(nonzero == 1);
    }
}

TEST_CASE("B_n equals C_n") {
    for (int n = 2; n <= 8; ++n) {
        auto bg = build_root_graph(RootFamily::B, n);
        auto cg = build_root_graph(RootFamily::C, n);
        CHECK(bg.graph.adj == cg.graph.adj);
        // C_n rays keep their 2e_i coordinates
        bool saw_two = false;
        for (const auto& r : cg.rays)
            for (long long x : r)
                if (x == 2) saw_two = true;
        CHECK(saw_two);
    }
}

TEST_CASE("A_n Kneser isomorphism") {
    for (int n = 1; n <= 6; ++n) {
        auto ag = build_root_graph(RootFamily::A, n);
        auto km = an_kneser_map(n);
        CHECK(bool(verify_isomorphism_map(ag.graph, km.target, km.map)));
        // alpha(A_n) = n for n != 2; A_2's three rays are pairwise
        // non-orthogonal, so its graph is edgeless and alpha = 3
        CHECK(independence_number(ag.graph) == (n == 2 ? 3 : n));
    }
    auto a2 = build_root_graph(RootFamily::A, 2);
    CHECK(a2.graph.edge_count() == 0);
    // n=3: both sides are 3 disjoint edges
    auto a3 = build_root_graph(RootFamily::A, 3);
    CHECK(a3.graph.edge_count() == 3);
}

TEST_CASE("D_n factorization") {
    for (int n = 4; n <= 7; ++n) {
        auto dg = build_root_graph(RootFamily::D, n);
        auto dm = dn_factorization_map(n);
        CHECK(bool(verify_isomorphism_map(dg.graph, dm.target, dm.map)));
        CHECK(independence_number(dg.graph) == n - 1);
    }
    // e_i + e_j and e_i - e_j are adjacent twins: equal neighbourhoods otherwise
    auto d5 = build_root_graph(RootFamily::D, 5);
    for (int u = 0; u < d5.graph.n; ++u)
        for (int v = u + 1; v < d5.graph.n; ++v) {
            bool same_pair = true;
            for (size_t c = 0; c < 5; ++c)
                if ((d5.rays[size_t(u)][c] != 0) != (d5.rays[size_t(v)][c] != 0)) same_pair = false;
            if (!same_pair) continue;
            CHECK(d5.graph.adjacent(u, v));
            for (int w = 0; w < d5.graph.n; ++w) {
                if (w == u || w == v) continue;
                CHECK(d5.graph.adjacent(u, w) == d5.graph.adjacent(v, w));
            }
        }
}

TEST_CASE("E8 symplectic model") {
    auto model = e8_symplectic_model();
    REQUIRE(model.vertex_masks.size() == 120);
    CHECK(bool(verify_clique_partition(model.graph, model.cells, 15, 8)));

    // every vertex is non-isotropic for Tr(xy) and the masks match phi
    const GfField& f = GfField::of(4);
    for (size_t i = 0; i < model.vertex_masks.size(); ++i) {
        auto [x, y] = model.field_coords[i];
        CHECK(f.trace(f.mul(x, y)) == 1);
        CHECK(model.field_to_canonical.apply(x | (y << 4)) == model.vertex_masks[i]);
    }
    // induced adjacency agrees with sigma on the masks
    for (size_t i = 0; i < model.vertex_masks.size(); i += 11)
        for (size_t j = i + 1; j < model.vertex_masks.size(); j += 7)
            CHECK(model.graph.adjacent(int(i), int(j)) ==
                  (sigma_mask(model.vertex_masks[i], model.vertex_masks[j], 4) == 0));
}
