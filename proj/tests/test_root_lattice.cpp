#include <random>
#include <set>

#include "doctest.h"
#include "zecap/root_lattice.hpp"
#include "zecap/root_systems.hpp"
#include "zecap/symplectic.hpp"

using namespace zecap;

TEST_CASE("root enumeration") {
    auto e7 = enumerate_roots(RootLattice::e7());
    CHECK(e7.roots.size() == 126);
    CHECK(e7.rays.size() == 63);

    auto e8 = enumerate_roots(RootLattice::e8());
    CHECK(e8.roots.size() == 240);
    CHECK(e8.rays.size() == 120);
    CHECK(e8.rays.size() == build_root_graph(RootFamily::E8).rays.size());
}

TEST_CASE("r polynomial") {
    RootLattice lat = RootLattice::e7();
    auto data = enumerate_roots(lat);
    for (const auto& g : data.roots) CHECK(r_poly(lat, g) == 1);

    // explicit quadratic form against the Gram route on the Dynkin edges
    LatticeCoords w = {0, 1, 0, 0, 1, 0, 1};
    CHECK(lat.ip(w, w) == 6);
    CHECK(r_poly(lat, w) == 3);

    // r mod 2 is invariant under gamma -> gamma + 2 delta
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> coord(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        LatticeCoords delta(7);
        for (auto& x : delta) x = coord(rng);
        const auto& g = data.roots[size_t(trial % data.roots.size())];
        LatticeCoords shifted(7);
        for (int i = 0; i < 7; ++i) shifted[size_t(i)] = g[size_t(i)] + 2 * delta[size_t(i)];
        CHECK(((r_poly(lat, shifted) - r_poly(lat, g)) % 2 + 2) % 2 == 0);
    }
}

TEST_CASE("even norms and radical pairings") {
    // Distinct roots can pair to -1 (adjacent simple roots do), so evenness
    // holds for norms and for pairings with w = a2+a5+a7, which is what the
    // kappa kernel argument actually uses.
    std::mt19937 rng(8);
    std::uniform_int_distribution<long long> coord(-3, 3);
    for (const RootLattice& lat : {RootLattice::e7(), RootLattice::e8()}) {
        auto data = enumerate_roots(lat);
        for (const auto& g : data.roots) CHECK(lat.ip(g, g) % 2 == 0);
        for (int trial = 0; trial < 100; ++trial) {
            LatticeCoords v(size_t(lat.rank));
            for (auto& x : v) x = coord(rng);
            CHECK(lat.ip(v, v) % 2 == 0);
        }
    }
    RootLattice e7 = RootLattice::e7();
    LatticeCoords w = {0, 1, 0, 0, 1, 0, 1};
    auto data = enumerate_roots(e7);
    for (const auto& g : data.roots) CHECK(e7.ip(g, w) % 2 == 0);
}

TEST_CASE("kappa construction") {
    auto kappa = construct_kappa_e7();
    RootLattice lat = RootLattice::e7();
    REQUIRE(kappa.v.size() == 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            int want = int((((-lat.gram[size_t(i)][size_t(j)]) % 2) + 2) % 2);
            CHECK(canonical_sigma(kappa.v[size_t(i)], kappa.v[size_t(j)]) == want);
        }
    CHECK((kappa.v[1] ^ kappa.v[4] ^ kappa.v[6]).is_zero());  // v2 + v5 + v7 = 0
    CHECK(kappa.apply({0, 1, 0, 0, 1, 0, 1}).is_zero());      // kappa(w) = 0
}

TEST_CASE("kappa bijection report") {
    RootLattice lat = RootLattice::e7();
    auto data = enumerate_roots(lat);
    auto kappa = construct_kappa_e7();
    auto rep = verify_kappa_bijection(lat, data, kappa);
    CHECK(rep.roots_nonzero);
    CHECK(rep.pairs_identified);
    CHECK(rep.onto_nonzero);
    CHECK(rep.compatible);
    CHECK(rep.pass());

    // antipodal pairs share images
    for (const auto& g : data.rays) {
        LatticeCoords neg(g.size());
        for (size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        CHECK(kappa.apply(g) == kappa.apply(neg));
    }
}

TEST_CASE("orthonormal representation") {
    auto rep = orthonormal_representation();
    auto sp6 = build_sp_graph(3);
    REQUIRE(rep.rays.size() == 63);
    for (int v = 0; v < 63; ++v) CHECK(rep.vertex_to_ray[size_t(v)] >= 0);

    // adjacency (sigma = 0) iff exact ray orthogonality, all pairs
    for (int u = 0; u < 63; ++u)
        for (int v = u + 1; v < 63; ++v)
            CHECK(sp6.graph.adjacent(u, v) ==
                  (rep.ray_ip(rep.vertex_to_ray[size_t(u)], rep.vertex_to_ray[size_t(v)]) == 0));

    // spread cells pull back to complete orthogonal frames
    auto spread = spread_partition(3);
    REQUIRE(spread.cells.cells.size() == 9);
    for (const auto& cell : spread.cells.cells)
        for (size_t a = 0; a < cell.size(); ++a)
            for (size_t b = a + 1; b < cell.size(); ++b)
                CHECK(rep.ray_ip(rep.vertex_to_ray[size_t(cell[a])],
                                 rep.vertex_to_ray[size_t(cell[b])]) == 0);

    // real embedding reproduces <g,d>/2 within 1e-9
    for (size_t a = 0; a < rep.rays.size(); a += 2)
        for (size_t b = a; b < rep.rays.size(); b += 3) {
            double ip = 0;
            for (int i = 0; i < 7; ++i) ip += rep.real_rays[a][size_t(i)] * rep.real_rays[b][size_t(i)];
            CHECK(std::abs(ip - double(rep.ray_ip(int(a), int(b))) / 2.0) < 1e-9);
        }
}

TEST_CASE("representation table") {
    auto rep = orthonormal_representation();
    auto rows = representation_table(rep);
    REQUIRE(rows.size() == 63);
    std::set<std::string> paulis, f26;
    int frame_counts[10] = {0};
    for (const auto& row : rows) {
        REQUIRE(row.frame >= 1);
        REQUIRE(row.frame <= 9);
        ++frame_counts[row.frame];
        paulis.insert(row.pauli);
        f26.insert(row.f26);
    }
    for (int fidx = 1; fidx <= 9; ++fidx) CHECK(frame_counts[fidx] == 7);
    CHECK(paulis.size() == 63);
    CHECK(f26.size() == 63);
    CHECK(representation_table_csv(rows).find("frame,") == 0);
}

TEST_CASE("E8 frame partition") {
    auto model = e8_symplectic_model();
    auto frames = e8_frame_partition(model);
    CHECK(frames.data.roots.size() == 240);
    CHECK(frames.data.rays.size() == 120);
    CHECK(frames.isotropic_count == 135);
    CHECK(bool(verify_clique_partition(frames.ray_graph, frames.cells, 15, 8)));

    // cells contain pairwise orthogonal rays in exact integer arithmetic
    RootLattice lat = RootLattice::e8();
    for (const auto& cell : frames.cells.cells)
        for (size_t a = 0; a < cell.size(); ++a)
            for (size_t b = a + 1; b < cell.size(); ++b)
                CHECK(lat.ip(frames.data.rays[size_t(cell[a])],
                             frames.data.rays[size_t(cell[b])]) == 0);

    // transfer map is a graph isomorphism onto the induced sp8 subgraph
    CHECK(bool(verify_isomorphism_map(frames.ray_graph, model.graph, frames.ray_to_model_vertex)));
}
