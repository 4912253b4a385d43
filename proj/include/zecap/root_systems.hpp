#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zecap/forms.hpp"
#include "zecap/graph.hpp"
#include "zecap/symplectic.hpp"

namespace zecap {

// Orthogonality graph of a root system in explicit coordinates: one integer
// vector per antipodal pair of roots, adjacency = exact dot product zero.
struct RayGraph {
    std::vector<std::vector<long long>> rays;
    Graph graph;
};

enum class RootFamily { A, B, C, D, G2, E8 };
RootFamily root_family_from_string(const std::string& s);

// Coordinate ray lists per family; normalization is ignored (it does not
// change orthogonality). Rays are canonicalized first-nonzero-positive and
// sorted. Rank bounds: A n>=1, B/C n>=2, D n>=4, all n<=8.
RayGraph build_root_graph(RootFamily family, int n = 0);

// B_n partition into n cliques of size n: odd n uses the i+j = 2k (mod n)
// rule; even n uses mod n-1 with pi_n = {e_1..e_n}. Cells index into
// build_root_graph(B,n).rays.
CliquePartition bn_partition(int n);

// A_n rays e_i - e_j mapped to Kneser pairs {i,j}; map[i] is the KG(n+1,2)
// vertex index for ray i.
struct GraphMap {
    Graph target;
    std::vector<int> map;
};
GraphMap an_kneser_map(int n);
// D_n as KG(n,2) boxtimes K_2: e_i-e_j -> ({i,j},0), e_i+e_j -> ({i,j},1).
GraphMap dn_factorization_map(int n);

// The 120 non-isotropic points of (F_16^2, Tr(xy)) as an induced subgraph of
// Sp(8,F_2), with the spread restricted to 15 cliques of size 8.
struct E8SymplecticModel {
    std::vector<uint32_t> vertex_masks;                     // canonical sp8 masks, ascending
    std::vector<std::pair<uint32_t, uint32_t>> field_coords;  // (x,y) per vertex
    Graph graph;                                            // induced subgraph on the 120
    CliquePartition cells;                                  // 15 x 8, local indices
    LinearMapGf2 field_to_canonical;
};
E8SymplecticModel e8_symplectic_model();

nlohmann::json ray_graph_to_json(const RayGraph& rg);

}  // namespace zecap
