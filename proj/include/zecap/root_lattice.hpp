#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zecap/bits.hpp"
#include "zecap/graph.hpp"
#include "zecap/root_systems.hpp"

namespace zecap {

using LatticeCoords = std::vector<long long>;

// Root lattice from Dynkin data: Gram matrix with 2 on the diagonal, -1 on
// diagram edges, 0 otherwise.
struct RootLattice {
    int rank = 0;
    std::vector<std::vector<long long>> gram;
    static RootLattice e7();
    static RootLattice e8();
    long long ip(const LatticeCoords& a, const LatticeCoords& b) const;
};

// Quadratic polynomial r with <g,g> = 2 r(<g>); roots are exactly r = 1.
long long r_poly(const RootLattice& lat, const LatticeCoords& c);

struct RootSystemData {
    std::vector<LatticeCoords> roots;  // all roots, sorted
    std::vector<LatticeCoords> rays;   // canonical representatives, sorted
};
// Closure of the simple roots under the simple reflections
// R_i(g) = g - <g,a_i> a_i; orbit capped at 10^4 elements.
RootSystemData enumerate_roots(const RootLattice& lat);

// kappa: L -> F_2^6, gamma -> sum <gamma>_i v_i mod 2, with
// sigma(v_i,v_j) = <a_i,a_j> mod 2 and v_2+v_5+v_7 = 0.
struct KappaMap {
    std::vector<Gf2Vec> v;  // rank vectors of length 2m
    Gf2Vec apply(const LatticeCoords& c) const;
};
KappaMap construct_kappa_e7();

struct KappaReport {
    bool roots_nonzero = false;       // kappa(root) != 0 for every root
    bool pairs_identified = false;    // kappa(a) = kappa(b) iff b = +-a
    bool onto_nonzero = false;        // ray images = all nonzero vectors
    bool compatible = false;          // sigma(k g, k d) = <g,d> mod 2, all pairs
    std::string first_failure;
    bool pass() const { return roots_nonzero && pairs_identified && onto_nonzero && compatible; }
};
KappaReport verify_kappa_bijection(const RootLattice& lat, const RootSystemData& data,
                                   const KappaMap& kappa);

// Orthonormal representation of Sp(6,F_2) by E7 rays: vertex u (mask 1..63)
// maps to the ray with kappa = u. Exact Gram data plus a Cholesky real
// embedding normalized to unit length.
struct OrthonormalRep {
    RootLattice lattice;
    std::vector<LatticeCoords> rays;              // 63 rays
    std::vector<int> vertex_to_ray;               // index by vertex mask - 1
    std::vector<std::vector<double>> real_rays;   // unit vectors in R^7
    long long ray_ip(int ray_a, int ray_b) const;
};
OrthonormalRep orthonormal_representation();

// Reference table: one row per vertex, grouped by the 9 spread frames.
struct RepresentationRow {
    int frame = 0;
    LatticeCoords coords;
    std::vector<double> real;
    std::string f26;    // bit-string of the F_2^6 image
    std::string pauli;  // 3-qubit Pauli label
};
std::vector<RepresentationRow> representation_table(const OrthonormalRep& rep);
std::string representation_table_csv(const std::vector<RepresentationRow>& rows);
nlohmann::json representation_table_json(const std::vector<RepresentationRow>& rows);

// E8 transfer: kappa_8 (coords mod 2) maps rays onto the 120 non-isotropic
// points of the mod-2 quadratic form q = <g,g>/2; a Witt isometry onto
// (F_16^2, Tr(xy)) pulls the restricted spread back to 15 frames of 8
// mutually orthogonal rays.
struct E8FrameResult {
    RootSystemData data;                  // 240 roots, 120 rays
    Graph ray_graph;                      // orthogonality graph of the rays (Gram ip = 0)
    CliquePartition cells;                // 15 x 8 over ray indices
    std::vector<int> ray_to_model_vertex; // index into model.vertex_masks
    long long isotropic_count = 0;        // nonzero isotropic points of the mod-2 form
};
E8FrameResult e8_frame_partition(const E8SymplecticModel& model);

}  // namespace zecap
