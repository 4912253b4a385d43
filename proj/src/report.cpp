#include "zecap/report.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "zecap/cliques.hpp"
#include "zecap/field.hpp"
#include "zecap/gf2.hpp"
#include "zecap/mis.hpp"
#include "zecap/root_lattice.hpp"
#include "zecap/root_systems.hpp"
#include "zecap/symplectic.hpp"

namespace zecap {

namespace {

using nlohmann::json;

double now_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct ClaimSink {
    json claims = json::array();
    bool pass = true;

    void add(const std::string& id, bool ok, json computed, double t0) {
        claims.push_back({{"claim", id},
                          {"pass", ok},
                          {"computed", std::move(computed)},
                          {"runtime_s", now_s() - t0}});
        pass = pass && ok;
    }
};

Channel random_channel(std::mt19937& rng, int max_in, int max_out) {
    std::uniform_int_distribution<int> insz(2, max_in), outsz(2, max_out), weight(0, 3);
    int nx = insz(rng), ny = outsz(rng);
    std::vector<std::string> in, out;
    for (int i = 0; i < nx; ++i) in.push_back("x" + std::to_string(i));
    for (int i = 0; i < ny; ++i) out.push_back("y" + std::to_string(i));
    std::vector<std::vector<Rat>> p(size_t(nx), std::vector<Rat>(size_t(ny), Rat(0)));
    for (int x = 0; x < nx; ++x) {
        long long total = 0;
        std::vector<long long> w(static_cast<size_t>(ny));
        for (int y = 0; y < ny; ++y) total += (w[size_t(y)] = weight(rng));
        if (total == 0) {
            w[size_t(x % ny)] = 1;
            total = 1;
        }
        for (int y = 0; y < ny; ++y) p[size_t(x)][size_t(y)] = Rat(w[size_t(y)], total);
    }
    return Channel(std::move(in), std::move(out), std::move(p));
}

}  // namespace

ZeroErrorCode make_sp6_code() {
    auto sp6 = build_sp_graph(3);
    auto spread = spread_partition(3);
    auto rep = orthonormal_representation();

    ZeroErrorCode code;
    code.graph = std::move(sp6.graph);
    code.partition = spread.cells;
    code.dim = 7;
    code.rep_gram = rep.lattice.gram;
    code.rep.resize(63);
    for (int v = 0; v < 63; ++v) code.rep[size_t(v)] = rep.rays[size_t(rep.vertex_to_ray[size_t(v)])];
    return code;
}

ZeroErrorCode make_e8_code() {
    auto model = e8_symplectic_model();
    auto frames = e8_frame_partition(model);

    ZeroErrorCode code;
    code.graph = model.graph;
    code.partition = model.cells;
    code.dim = 8;
    code.rep_gram = RootLattice::e8().gram;
    code.rep.resize(model.vertex_masks.size());
    for (size_t ray = 0; ray < frames.data.rays.size(); ++ray)
        code.rep[size_t(frames.ray_to_model_vertex[ray])] = frames.data.rays[ray];
    return code;
}

ReportBundle report_sp(int m) {
    ReportBundle bundle;
    bundle.target = "sp";
    ClaimSink sink;
    double t0 = now_s();

    auto sp = build_sp_graph(m);
    int n = (1 << (2 * m)) - 1;
    sink.add("vertex count 2^(2m)-1", sp.graph.n == n, {{"vertices", sp.graph.n}}, t0);

    t0 = now_s();
    auto cert = capacity_certificate_sp(m);
    sink.add("alpha = rank = 2m+1",
             cert.equal && cert.alpha_lower == 2 * m + 1,
             certificate_to_json(cert), t0);

    t0 = now_s();
    auto spread = spread_partition(m);
    auto pc = verify_clique_partition(sp.graph, spread.cells, (1 << m) + 1, (1 << m) - 1);
    sink.add("spread (2^m+1 cliques of 2^m-1)", bool(pc),
             {{"cells", (1 << m) + 1}, {"cell_size", (1 << m) - 1}, {"valid", bool(pc)}}, t0);

    t0 = now_s();
    auto trans = verify_vertex_transitive(m);
    sink.add("vertex transitive", trans.transitive && trans.sigma_preserved,
             {{"orbit", trans.orbit_size}, {"sigma_preserved", trans.sigma_preserved}}, t0);

    if (m <= 3) {
        t0 = now_s();
        int alpha = independence_number(sp.graph);
        sink.add("MIS search confirms alpha", alpha == 2 * m + 1, {{"alpha", alpha}}, t0);
    }

    bundle.doc = {{"target", "sp"}, {"m", m}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_roots() {
    ReportBundle bundle;
    bundle.target = "roots";
    ClaimSink sink;

    for (int n = 1; n <= 6; ++n) {
        double t0 = now_s();
        auto ag = build_root_graph(RootFamily::A, n);
        int alpha = independence_number(ag.graph);
        auto km = an_kneser_map(n);
        auto iso = verify_isomorphism_map(ag.graph, km.target, km.map);
        sink.add("A_" + std::to_string(n) + ": alpha = n, Kneser isomorphism",
                 alpha == n && bool(iso),
                 {{"rays", int(ag.rays.size())}, {"alpha", alpha}, {"kneser_iso", bool(iso)}}, t0);
    }
    for (int n = 2; n <= 6; ++n) {
        double t0 = now_s();
        auto bg = build_root_graph(RootFamily::B, n);
        int alpha = independence_number(bg.graph);
        auto part = bn_partition(n);
        auto pc = verify_clique_partition(bg.graph, part, n, n);
        sink.add("B_" + std::to_string(n) + ": alpha = n, n-clique partition",
                 alpha == n && bool(pc) && int(bg.rays.size()) == n * n,
                 {{"rays", int(bg.rays.size())}, {"alpha", alpha}, {"partition", bool(pc)}}, t0);
    }
    for (int n = 2; n <= 8; ++n) {
        double t0 = now_s();
        auto bg = build_root_graph(RootFamily::B, n);
        auto cg = build_root_graph(RootFamily::C, n);
        bool same = (bg.graph.adj == cg.graph.adj);
        sink.add("C_" + std::to_string(n) + " graph identical to B_" + std::to_string(n), same,
                 {{"identical", same}}, t0);
    }
    for (int n = 4; n <= 7; ++n) {
        double t0 = now_s();
        auto dg = build_root_graph(RootFamily::D, n);
        int alpha = independence_number(dg.graph);
        auto dm = dn_factorization_map(n);
        auto iso = verify_isomorphism_map(dg.graph, dm.target, dm.map);
        sink.add("D_" + std::to_string(n) + ": alpha = n-1, KG(n,2) x K_2 isomorphism",
                 alpha == n - 1 && bool(iso),
                 {{"rays", int(dg.rays.size())}, {"alpha", alpha}, {"product_iso", bool(iso)}}, t0);
    }
    {
        double t0 = now_s();
        auto gg = build_root_graph(RootFamily::G2);
        int alpha = independence_number(gg.graph);
        // the three orthogonal pairs form the clique partition
        CliquePartition part;
        for (auto [u, v] : gg.graph.edges()) part.cells.push_back({u, v});
        auto pc = verify_clique_partition(gg.graph, part, 3, 2);
        sink.add("G2: alpha = 3, 3 cliques of 2",
                 alpha == 3 && bool(pc) && gg.graph.edge_count() == 3,
                 {{"rays", int(gg.rays.size())}, {"alpha", alpha}, {"edges", gg.graph.edge_count()}},
                 t0);
    }

    bundle.doc = {{"target", "roots"}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_e7() {
    ReportBundle bundle;
    bundle.target = "e7";
    ClaimSink sink;
    double t0 = now_s();

    RootLattice lat = RootLattice::e7();
    auto data = enumerate_roots(lat);
    sink.add("126 roots in 63 antipodal pairs",
             data.roots.size() == 126 && data.rays.size() == 63,
             {{"roots", int(data.roots.size())}, {"rays", int(data.rays.size())}}, t0);

    t0 = now_s();
    bool all_r1 = true;
    for (const auto& g : data.roots)
        if (r_poly(lat, g) != 1) all_r1 = false;
    sink.add("r(<gamma>) = 1 for every root", all_r1, {{"all_one", all_r1}}, t0);

    t0 = now_s();
    auto kappa = construct_kappa_e7();
    LatticeCoords w = {0, 1, 0, 0, 1, 0, 1};
    bool kernel_ok = kappa.apply(w).is_zero() && lat.ip(w, w) == 6 && r_poly(lat, w) == 3;
    sink.add("kappa(w) = 0, <w,w> = 6, r(<w>) = 3", kernel_ok,
             {{"kappa_w_zero", kappa.apply(w).is_zero()},
              {"w_norm", lat.ip(w, w)},
              {"r_w", r_poly(lat, w)}},
             t0);

    t0 = now_s();
    auto check = verify_kappa_bijection(lat, data, kappa);
    sink.add("kappa bijection and compatibility", check.pass(),
             {{"roots_nonzero", check.roots_nonzero},
              {"pairs_identified", check.pairs_identified},
              {"onto_nonzero", check.onto_nonzero},
              {"compatible", check.compatible}},
             t0);

    t0 = now_s();
    auto rep = orthonormal_representation();
    auto sp6 = build_sp_graph(3);
    bool adjacency_matches = true;
    for (int u = 0; u < 63 && adjacency_matches; ++u)
        for (int v = u + 1; v < 63; ++v) {
            bool orth = rep.ray_ip(rep.vertex_to_ray[size_t(u)], rep.vertex_to_ray[size_t(v)]) == 0;
            if (orth != sp6.graph.adjacent(u, v)) {
                adjacency_matches = false;
                break;
            }
        }
    sink.add("orthogonality matches sp6 adjacency on all pairs", adjacency_matches,
             {{"pairs", 63 * 62 / 2}}, t0);

    t0 = now_s();
    auto spread = spread_partition(3);
    bool frames_ok = true;
    for (const auto& cell : spread.cells.cells)
        for (size_t a = 0; a < cell.size() && frames_ok; ++a)
            for (size_t b = a + 1; b < cell.size(); ++b) {
                if (rep.ray_ip(rep.vertex_to_ray[size_t(cell[a])],
                               rep.vertex_to_ray[size_t(cell[b])]) != 0) {
                    frames_ok = false;
                    break;
                }
            }
    sink.add("spread pulls back to 9 orthogonal 7-frames", frames_ok,
             {{"frames", int(spread.cells.cells.size())}}, t0);

    t0 = now_s();
    double max_dev = 0;
    for (size_t a = 0; a < rep.rays.size(); ++a)
        for (size_t b = a; b < rep.rays.size(); ++b) {
            double real_ip = 0;
            for (int i = 0; i < 7; ++i) real_ip += rep.real_rays[a][size_t(i)] * rep.real_rays[b][size_t(i)];
            double exact = double(rep.ray_ip(int(a), int(b))) / 2.0;  // unit-normalized roots
            max_dev = std::max(max_dev, std::abs(real_ip - exact));
        }
    sink.add("real embedding reproduces exact Gram within 1e-9", max_dev < 1e-9,
             {{"max_deviation", max_dev}}, t0);

    bundle.doc = {{"target", "e7"}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_e8() {
    ReportBundle bundle;
    bundle.target = "e8";
    ClaimSink sink;
    double t0 = now_s();

    auto coord = build_root_graph(RootFamily::E8);
    sink.add("coordinate model: 120 rays", coord.rays.size() == 120,
             {{"rays", int(coord.rays.size())}}, t0);

    t0 = now_s();
    auto model = e8_symplectic_model();
    auto pc_model = verify_clique_partition(model.graph, model.cells, 15, 8);
    sink.add("symplectic model: 120 non-isotropic points, 15x8 restricted spread",
             model.vertex_masks.size() == 120 && bool(pc_model),
             {{"vertices", int(model.vertex_masks.size())}, {"partition", bool(pc_model)}}, t0);

    t0 = now_s();
    auto frames = e8_frame_partition(model);
    auto pc_rays = verify_clique_partition(frames.ray_graph, frames.cells, 15, 8);
    sink.add("lattice: 240 roots, kappa_8 bijection, Witt transfer to 15 ray frames",
             frames.data.roots.size() == 240 && frames.data.rays.size() == 120 &&
                 frames.isotropic_count == 135 && bool(pc_rays),
             {{"roots", int(frames.data.roots.size())},
              {"rays", int(frames.data.rays.size())},
              {"isotropic_nonzero", frames.isotropic_count},
              {"frames_valid", bool(pc_rays)}},
             t0);

    t0 = now_s();
    auto iso = verify_isomorphism_map(frames.ray_graph, model.graph, frames.ray_to_model_vertex);
    sink.add("ray graph isomorphic to the induced sp8 subgraph", bool(iso),
             {{"isomorphism", bool(iso)}}, t0);

    t0 = now_s();
    auto code = make_e8_code();
    auto cc = verify_code(code);
    sink.add("zero-error code valid: C0E(E8) = log2 15", bool(cc),
             {{"k", 15}, {"d", 8}, {"c0e_log2", std::log2(15.0)}}, t0);

    t0 = now_s();
    auto cert = capacity_certificate_sp(4);
    sink.add("induced subgraph bound: C0(E8) <= log2 9", cert.equal && cert.rank_upper == 9,
             {{"sp8_alpha", cert.alpha_lower}, {"sp8_rank", cert.rank_upper},
              {"c0_upper_log2", std::log2(9.0)}},
             t0);

    t0 = now_s();
    int alpha = independence_number(coord.graph);
    int alpha_lattice = independence_number(frames.ray_graph);
    sink.add("alpha(E8 ray graph) recorded and <= 9", alpha <= 9 && alpha == alpha_lattice,
             {{"alpha", alpha}, {"alpha_lattice_model", alpha_lattice}}, t0);

    bundle.doc = {{"target", "e8"}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_protocol(const std::string& graph_name) {
    ReportBundle bundle;
    bundle.target = "protocol";
    ClaimSink sink;
    double t0 = now_s();

    ZeroErrorCode code;
    CliqueChannel cc;
    if (graph_name == "sp6") {
        code = make_sp6_code();
        cc = channel_from_cliques(code.graph, 7);
    } else if (graph_name == "e8") {
        code = make_e8_code();
        cc = channel_from_cliques(code.graph, 8);
    } else {
        throw std::invalid_argument("report_protocol: unknown graph " + graph_name);
    }
    sink.add("channel built from all size-d cliques", cc.report.double_count_ok,
             {{"outputs", cc.report.num_outputs},
              {"cliques_per_vertex", cc.report.cliques_per_vertex},
              {"capacity_log2", cc.report.capacity_log2}},
             t0);

    t0 = now_s();
    auto vc = verify_code(code);
    sink.add("code premises verified", bool(vc), {{"valid", bool(vc)}, {"reason", vc.reason}}, t0);

    t0 = now_s();
    auto sim = simulate_zero_error(cc.channel, code);
    sink.add("zero decoding failures over all branches", sim.zero_error(),
             simulation_to_json(sim), t0);

    t0 = now_s();
    auto demo = entangled_state_demo(code);
    bool demo_ok = demo.max_outcome_prob_deviation < 1e-9 && demo.max_residual_overlap < 1e-9;
    sink.add("state demo: uniform outcomes, residual orthogonality (float)", demo_ok,
             {{"max_outcome_prob_deviation", demo.max_outcome_prob_deviation},
              {"max_residual_overlap", demo.max_residual_overlap}},
             t0);

    bundle.doc = {{"target", "protocol"},
                  {"graph", graph_name},
                  {"claims", sink.claims},
                  {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_capacity(double tol) {
    ReportBundle bundle;
    bundle.target = "capacity";
    ClaimSink sink;
    double t0 = now_s();

    auto sp6 = build_sp_graph(3);
    auto cc = channel_from_cliques(sp6.graph, 7);
    long long lhs = cc.report.num_outputs * 7;
    long long rhs = 63 * cc.report.cliques_per_vertex;
    sink.add("double count |Y| d = |X| m", cc.report.double_count_ok && lhs == rhs,
             {{"lhs", lhs}, {"rhs", rhs}, {"outputs", cc.report.num_outputs},
              {"cliques_per_vertex", cc.report.cliques_per_vertex}},
             t0);

    t0 = now_s();
    auto ba = blahut_arimoto(cc.channel, tol);
    double expected = std::log2(9.0);
    sink.add("Blahut-Arimoto agrees with log2 9", std::abs(ba.capacity_bits - expected) < 1e-4,
             {{"capacity_bits", ba.capacity_bits},
              {"expected", expected},
              {"iterations", ba.iterations}},
             t0);

    bundle.doc = {{"target", "capacity"}, {"tol", tol}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_baseline() {
    ReportBundle bundle;
    bundle.target = "baseline";
    ClaimSink sink;
    double t0 = now_s();

    auto c5 = cycle_graph(5);
    int a1 = independence_number(c5);
    auto c5c5 = strong_product(c5, c5);
    int a2 = independence_number(c5c5);
    sink.add("alpha(C5) = 2 and alpha(C5 x C5) = 5", a1 == 2 && a2 == 5,
             {{"alpha_c5", a1}, {"alpha_c5_sq", a2}}, t0);

    t0 = now_s();
    auto pentagon = noisy_cycle_channel(5);
    auto pg = confusability_graph(pentagon);
    auto iso5 = verify_isomorphism_map(pg, c5, {0, 1, 2, 3, 4});
    sink.add("pentagon channel has confusability graph C5", bool(iso5), {{"ok", bool(iso5)}}, t0);

    t0 = now_s();
    std::mt19937 rng(12345);
    bool tensor_ok = true;
    for (int trial = 0; trial < 50 && tensor_ok; ++trial) {
        auto n1 = random_channel(rng, 4, 5);
        auto n2 = random_channel(rng, 4, 5);
        auto lhs = confusability_graph(tensor_channels(n1, n2));
        auto rhs = strong_product(confusability_graph(n1), confusability_graph(n2));
        std::vector<int> ident(static_cast<size_t>(lhs.n));
        for (int i = 0; i < lhs.n; ++i) ident[size_t(i)] = i;
        if (!verify_isomorphism_map(lhs, rhs, ident)) tensor_ok = false;
    }
    sink.add("G(N1 x N2) = G(N1) boxtimes G(N2) on 50 random pairs", tensor_ok,
             {{"trials", 50}}, t0);

    t0 = now_s();
    auto sp6 = build_sp_graph(3);
    auto spread = spread_partition(3);
    auto ks = ks_search(sp6.graph, spread.cells);
    sink.add("KS obstruction: 7 of 9 spread cells assignable", ks.cells_satisfiable == 7,
             ks_to_json(ks), t0);

    t0 = now_s();
    auto gg = build_root_graph(RootFamily::G2);
    CliquePartition gpart;
    for (auto [u, v] : gg.graph.edges()) gpart.cells.push_back({u, v});
    auto ksg = ks_search(gg.graph, gpart);
    sink.add("G2 partition has no KS obstruction", ksg.cells_satisfiable == 3, ks_to_json(ksg), t0);

    bundle.doc = {{"target", "baseline"}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_properties() {
    ReportBundle bundle;
    bundle.target = "properties";
    ClaimSink sink;
    double t0 = now_s();

    std::mt19937 rng(67890);
    std::uniform_int_distribution<int> bit(0, 1);
    bool kron_ok = true;
    for (int trial = 0; trial < 20 && kron_ok; ++trial) {
        Gf2Matrix a(4, 4), b(5, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a.set(i, j, bit(rng));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) b.set(i, j, bit(rng));
        if (gf2_rank(gf2_kron(a, b)) != gf2_rank(a) * gf2_rank(b)) kron_ok = false;
    }
    sink.add("rank(A kron B) = rank(A) rank(B), 20 random pairs", kron_ok, {{"trials", 20}}, t0);

    t0 = now_s();
    bool trace_ok = true;
    for (int m = 1; m <= 4 && trace_ok; ++m) {
        const GfField& f = GfField::of(m);
        for (uint32_t a = 0; a < f.order() && trace_ok; ++a) {
            if (f.trace(f.mul(a, a)) != f.trace(a)) trace_ok = false;
            for (uint32_t b = 0; b < f.order(); ++b)
                if (f.trace(a ^ b) != (f.trace(a) ^ f.trace(b))) {
                    trace_ok = false;
                    break;
                }
        }
    }
    sink.add("trace linear and Frobenius-invariant, m <= 4 exhaustive", trace_ok, {}, t0);

    t0 = now_s();
    bool refl_ok = true;
    for (const RootLattice& lat : {RootLattice::e7(), RootLattice::e8()}) {
        auto data = enumerate_roots(lat);
        for (const auto& g : data.roots) {
            for (int i = 0; i < lat.rank && refl_ok; ++i) {
                long long coeff = 0;
                for (int j = 0; j < lat.rank; ++j) coeff += lat.gram[size_t(i)][size_t(j)] * g[size_t(j)];
                LatticeCoords r = g;
                r[size_t(i)] -= coeff;
                if (lat.ip(r, r) != lat.ip(g, g)) refl_ok = false;
            }
            if (!refl_ok) break;
        }
    }
    sink.add("simple reflections preserve norms on all roots", refl_ok, {}, t0);

    t0 = now_s();
    auto ba = blahut_arimoto(noisy_cycle_channel(5), 1e-9);
    bool monotone = true;
    for (size_t i = 1; i < ba.lower_history.size(); ++i)
        if (ba.lower_history[i] + 1e-12 < ba.lower_history[i - 1]) monotone = false;
    sink.add("Blahut-Arimoto lower bounds are monotone", monotone,
             {{"iterations", ba.iterations}, {"capacity_bits", ba.capacity_bits}}, t0);

    bundle.doc = {{"target", "properties"}, {"claims", sink.claims}, {"pass", sink.pass}};
    bundle.pass = sink.pass;
    return bundle;
}

ReportBundle report_all(double tol) {
    ReportBundle bundle;
    bundle.target = "all";
    json sections = json::array();
    bool pass = true;
    for (int m = 1; m <= 4; ++m) {
        auto b = report_sp(m);
        sections.push_back(b.doc);
        pass = pass && b.pass;
    }
    for (auto b : {report_roots(), report_e7(), report_e8(), report_protocol("sp6"),
                   report_protocol("e8"), report_capacity(tol), report_baseline(),
                   report_properties()}) {
        sections.push_back(b.doc);
        pass = pass && b.pass;
    }
    bundle.doc = {{"target", "all"}, {"sections", sections}, {"pass", pass}};
    bundle.pass = pass;
    return bundle;
}

namespace {

void render_claims(std::ostringstream& os, const json& doc) {
    for (const auto& claim : doc.at("claims")) {
        os << "  [" << (claim.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
           << claim.at("claim").get<std::string>();
        const auto& computed = claim.at("computed");
        if (!computed.empty()) os << "  " << computed.dump();
        os << "\n";
    }
}

}  // namespace

std::string report_text(const ReportBundle& bundle) {
    std::ostringstream os;
    if (bundle.target == "all") {
        for (const auto& section : bundle.doc.at("sections")) {
            os << "== " << section.at("target").get<std::string>();
            if (section.contains("m")) os << " (m=" << section.at("m").get<int>() << ")";
            os << " ==\n";
            render_claims(os, section);
        }
    } else {
        os << "== " << bundle.target << " ==\n";
        render_claims(os, bundle.doc);
    }
    os << (bundle.pass ? "ALL CLAIMS PASS" : "SOME CLAIMS FAILED") << "\n";
    return os.str();
}

Graph graph_by_name(const std::string& name) {
    if (name == "sp2") return build_sp_graph(1).graph;
    if (name == "sp4") return build_sp_graph(2).graph;
    if (name == "sp6") return build_sp_graph(3).graph;
    if (name == "sp8") return build_sp_graph(4).graph;
    if (name == "c5") return cycle_graph(5);
    if (name == "petersen") return petersen_graph();
    if (name == "e8-model") return e8_symplectic_model().graph;
    if (name == "e7-rays") {
        auto rep = orthonormal_representation();
        Graph g(int(rep.rays.size()));
        for (size_t i = 0; i < rep.rays.size(); ++i)
            for (size_t j = i + 1; j < rep.rays.size(); ++j)
                if (rep.ray_ip(int(i), int(j)) == 0) g.add_edge(int(i), int(j));
        return g;
    }
    if (is_ray_graph_name(name)) return ray_graph_by_name(name).graph;
    throw std::invalid_argument("unknown graph name: " + name);
}

bool is_ray_graph_name(const std::string& name) {
    if (name == "g2" || name == "e8-rays") return true;
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '8')
        return name[0] == 'a' || name[0] == 'b' || name[0] == 'c' || name[0] == 'd';
    return false;
}

RayGraph ray_graph_by_name(const std::string& name) {
    if (name == "g2") return build_root_graph(RootFamily::G2);
    if (name == "e8-rays") return build_root_graph(RootFamily::E8);
    if (name.size() == 2) {
        int n = name[1] - '0';
        switch (name[0]) {
            case 'a': return build_root_graph(RootFamily::A, n);
            case 'b': return build_root_graph(RootFamily::B, n);
            case 'c': return build_root_graph(RootFamily::C, n);
            case 'd': return build_root_graph(RootFamily::D, n);
        }
    }
    throw std::invalid_argument("not a ray graph: " + name);
}

Channel channel_by_name(const std::string& name) {
    if (name == "sp6") return channel_from_cliques(build_sp_graph(3).graph, 7).channel;
    if (name == "e8") return channel_from_cliques(e8_symplectic_model().graph, 8).channel;
    throw std::invalid_argument("unknown channel name: " + name);
}

}  // namespace zecap
