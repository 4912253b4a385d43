#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zecap/forms.hpp"
#include "zecap/gf2.hpp"
#include "zecap/graph.hpp"

namespace zecap {

// Symplectic graph Sp(2m,F_2): vertices are the 2^{2m}-1 nonzero vectors of
// F_2^{2m}, u ~ v iff sigma(u,v) = 0. Vertex i carries the mask i+1.
struct SymplecticGraph {
    int m = 0;
    Graph graph;
};

inline uint32_t sp_vertex_mask(int idx) { return uint32_t(idx) + 1; }
inline int sp_vertex_index(uint32_t mask) { return int(mask) - 1; }
std::string pauli_label(uint32_t mask, int m);  // "XIZ"-style, qubit 1 first

SymplecticGraph build_sp_graph(int m, bool pauli_labels = false);  // 1 <= m <= 4

// Spread: 2^m+1 cliques of size 2^m-1, built in the (F_N^2, sigma_N) model
// (cells pi_a = {(x,ax)} and pi_{N+1} = {(0,x)}) and carried to canonical
// coordinates by a fixed symplectic isomorphism. field_model[i] holds the
// (x,y) coefficient masks of vertex i.
struct Spread {
    CliquePartition cells;
    std::vector<std::pair<uint32_t, uint32_t>> field_model;
};
Spread spread_partition(int m);

// Fixed symplectic isomorphism (F_N^2, sigma_N) -> (F_2^{2m}, sigma); input
// coordinates pack the polynomial coefficients of (x,y) as low/high m bits.
LinearMapGf2 field_to_canonical_iso(int m);

// Haemers fitting matrix M_{uv} = 1 + sigma(u,v) over GF(2).
Gf2Matrix fitting_matrix(int m);

// The 2m+1 vertices T^{-1}(e_i + 1), pairwise sigma = 1. Returned as vertex
// indices of build_sp_graph(m).
std::vector<int> canonical_independent_set(int m);

// The map T: (F_2^{2m}, sigma) -> (U_m, <.,.>) realized by matching symplectic
// bases; returns ambient F_2^{2m+1} images of the canonical basis vectors.
std::vector<Gf2Vec> u_space_isomorphism(int m);

struct TransitivityReport {
    bool transitive = false;
    int orbit_size = 0;
    bool sigma_preserved = false;
};
// Orbit of one vertex under all symplectic transvections T_v(x) = x + sigma(x,v) v.
TransitivityReport verify_vertex_transitive(int m);

struct SpCertificate {
    int m = 0;
    int alpha_lower = 0;
    int rank_upper = 0;
    bool equal = false;
    double capacity_log2 = 0.0;
};
SpCertificate capacity_certificate_sp(int m);
nlohmann::json certificate_to_json(const SpCertificate& c);

}  // namespace zecap
