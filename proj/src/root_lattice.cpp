#include "zecap/root_lattice.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "zecap/field.hpp"
#include "zecap/symplectic.hpp"

namespace zecap {

namespace {

// Dynkin edges, 1-based node numbers. E8 extends the E7 diagram by node 8
// attached to node 7; the root count 240 checked downstream pins the choice.
const std::vector<std::pair<int, int>> kE7Edges = {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
const std::vector<std::pair<int, int>> kE8Edges = {{1, 3}, {2, 4}, {3, 4}, {4, 5},
                                                   {5, 6}, {6, 7}, {7, 8}};

RootLattice from_dynkin(int rank, const std::vector<std::pair<int, int>>& edges) {
    RootLattice lat;
    lat.rank = rank;
    lat.gram.assign(size_t(rank), std::vector<long long>(size_t(rank), 0));
    for (int i = 0; i < rank; ++i) lat.gram[size_t(i)][size_t(i)] = 2;
    for (auto [i, j] : edges) {
        lat.gram[size_t(i - 1)][size_t(j - 1)] = -1;
        lat.gram[size_t(j - 1)][size_t(i - 1)] = -1;
    }
    return lat;
}

LatticeCoords canonical_ray_rep(const LatticeCoords& c) {
    for (long long x : c) {
        if (x > 0) return c;
        if (x < 0) {
            LatticeCoords neg(c.size());
            for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
            return neg;
        }
    }
    return c;
}

}  // namespace

RootLattice RootLattice::e7() { return from_dynkin(7, kE7Edges); }
RootLattice RootLattice::e8() { return from_dynkin(8, kE8Edges); }

long long RootLattice::ip(const LatticeCoords& a, const LatticeCoords& b) const {
    if (int(a.size()) != rank || int(b.size()) != rank)
        throw std::invalid_argument("RootLattice::ip: coordinate length mismatch");
    long long s = 0;
    for (int i = 0; i < rank; ++i) {
        long long row = 0;
        for (int j = 0; j < rank; ++j) row += gram[size_t(i)][size_t(j)] * b[size_t(j)];
        s += a[size_t(i)] * row;
    }
    return s;
}

long long r_poly(const RootLattice& lat, const LatticeCoords& c) {
    long long ip = lat.ip(c, c);
    if (ip % 2 != 0) throw std::logic_error("r_poly: odd norm in an even lattice");
    return ip / 2;
}

RootSystemData enumerate_roots(const RootLattice& lat) {
    if (lat.rank != 7 && lat.rank != 8)
        throw std::invalid_argument("enumerate_roots: rank must be 7 or 8");
    std::set<LatticeCoords> seen;
    std::vector<LatticeCoords> frontier;
    for (int i = 0; i < lat.rank; ++i) {
        LatticeCoords e(size_t(lat.rank), 0);
        e[size_t(i)] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<LatticeCoords> next;
        for (const auto& g : frontier) {
            for (int i = 0; i < lat.rank; ++i) {
                // R_i(g) = g - <g, a_i> a_i; <g, a_i> = (G g)_i
                long long coeff = 0;
                for (int j = 0; j < lat.rank; ++j)
                    coeff += lat.gram[size_t(i)][size_t(j)] * g[size_t(j)];
                LatticeCoords r = g;
                r[size_t(i)] -= coeff;
                if (seen.insert(r).second) next.push_back(r);
            }
        }
        frontier = std::move(next);
        if (seen.size() > 10000)
            throw std::runtime_error("enumerate_roots: orbit exceeded the 10^4 cap");
    }

    RootSystemData data;
    data.roots.assign(seen.begin(), seen.end());
    for (const auto& g : data.roots)
        if (lat.ip(g, g) != 2)
            throw std::logic_error("enumerate_roots: reflection orbit left the norm-2 shell");
    std::set<LatticeCoords> rayset;
    for (const auto& g : data.roots) rayset.insert(canonical_ray_rep(g));
    data.rays.assign(rayset.begin(), rayset.end());
    if (data.rays.size() * 2 != data.roots.size())
        throw std::logic_error("enumerate_roots: roots do not split into antipodal pairs");
    return data;
}

Gf2Vec KappaMap::apply(const LatticeCoords& c) const {
    if (c.size() != v.size()) throw std::invalid_argument("KappaMap: coordinate length mismatch");
    Gf2Vec acc(0, v[0].len);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] % 2 != 0) acc = acc ^ v[i];
    return acc;
}

KappaMap construct_kappa_e7() {
    RootLattice lat = RootLattice::e7();
    const int dim = 6;
    // sigma(v_i, v_j) must equal <a_i, a_j> mod 2: 0 on the diagonal and on
    // non-edges, 1 on Dynkin edges; additionally v_7 = v_2 + v_5.
    auto target = [&](int i, int j) { return int(((-lat.gram[size_t(i)][size_t(j)]) % 2 + 2) % 2); };

    std::vector<uint32_t> vs;
    auto sig = [&](uint32_t a, uint32_t b) { return sigma_mask(a, b, dim / 2); };

    // lexicographic backtracking over v_1..v_6; v_7 is forced
    std::function<bool()> search = [&]() -> bool {
        int i = int(vs.size());
        if (i == 6) {
            uint32_t v7 = vs[1] ^ vs[4];
            for (int a = 0; a < 6; ++a)
                if (sig(vs[size_t(a)], v7) != target(a, 6)) return false;
            vs.push_back(v7);
            return true;
        }
        for (uint32_t cand = 0; cand < (1u << dim); ++cand) {
            bool ok = true;
            for (int a = 0; a < i && ok; ++a)
                if (sig(vs[size_t(a)], cand) != target(a, i)) ok = false;
            if (!ok) continue;
            vs.push_back(cand);
            if (search()) return true;
            vs.pop_back();
        }
        return false;
    };
    if (!search())
        throw std::runtime_error("construct_kappa_e7: no solution (constraints are inconsistent)");

    KappaMap kappa;
    for (uint32_t v : vs) kappa.v.emplace_back(v, dim);
    return kappa;
}

KappaReport verify_kappa_bijection(const RootLattice& lat, const RootSystemData& data,
                                   const KappaMap& kappa) {
    KappaReport rep;
    int dim = kappa.v[0].len;

    rep.roots_nonzero = true;
    for (const auto& g : data.roots)
        if (kappa.apply(g).is_zero()) {
            rep.roots_nonzero = false;
            rep.first_failure = "kappa vanishes on a root";
            break;
        }

    rep.pairs_identified = true;
    std::vector<Gf2Vec> root_imgs;
    for (const auto& g : data.roots) root_imgs.push_back(kappa.apply(g));
    for (size_t a = 0; a < data.roots.size() && rep.pairs_identified; ++a)
        for (size_t b = 0; b < data.roots.size(); ++b) {
            bool antipodal = true;
            for (size_t i = 0; i < data.roots[a].size(); ++i)
                if (data.roots[a][i] != -data.roots[b][i]) antipodal = false;
            bool same = (a == b) || antipodal;
            if ((root_imgs[a] == root_imgs[b]) != same) {
                rep.pairs_identified = false;
                rep.first_failure = "kappa identifies a non-antipodal pair";
                break;
            }
        }

    std::set<uint32_t> images;
    for (const auto& g : data.rays) {
        Gf2Vec img = kappa.apply(g);
        if (!img.is_zero()) images.insert(img.bits);
    }
    rep.onto_nonzero = (images.size() == (size_t(1) << dim) - 1);
    if (!rep.onto_nonzero && rep.first_failure.empty())
        rep.first_failure = "ray images miss part of F_2^" + std::to_string(dim);

    rep.compatible = true;
    for (size_t a = 0; a < data.roots.size() && rep.compatible; ++a)
        for (size_t b = a; b < data.roots.size(); ++b) {
            long long ip = lat.ip(data.roots[a], data.roots[b]);
            if (canonical_sigma(root_imgs[a], root_imgs[b]) != ((ip % 2 + 2) % 2)) {
                rep.compatible = false;
                rep.first_failure = "sigma(kappa g, kappa d) != <g,d> mod 2";
                break;
            }
        }
    return rep;
}

namespace {

// Cholesky factor of a small SPD integer Gram matrix; rows are the embedded
// basis vectors.
std::vector<std::vector<double>> cholesky_rows(const std::vector<std::vector<long long>>& gram) {
    int n = int(gram.size());
    std::vector<std::vector<double>> l(size_t(n), std::vector<double>(size_t(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = double(gram[size_t(i)][size_t(j)]);
            for (int k = 0; k < j; ++k) s -= l[size_t(i)][size_t(k)] * l[size_t(j)][size_t(k)];
            if (i == j) {
                if (s <= 0.0) throw std::logic_error("cholesky: matrix not positive definite");
                l[size_t(i)][size_t(j)] = std::sqrt(s);
            } else {
                l[size_t(i)][size_t(j)] = s / l[size_t(j)][size_t(j)];
            }
        }
    }
    return l;
}

}  // namespace

long long OrthonormalRep::ray_ip(int ray_a, int ray_b) const {
    return lattice.ip(rays[size_t(ray_a)], rays[size_t(ray_b)]);
}

OrthonormalRep orthonormal_representation() {
    OrthonormalRep rep;
    rep.lattice = RootLattice::e7();
    auto data = enumerate_roots(rep.lattice);
    auto kappa = construct_kappa_e7();
    auto check = verify_kappa_bijection(rep.lattice, data, kappa);
    if (!check.pass())
        throw std::runtime_error("orthonormal_representation: kappa verification failed: " +
                                 check.first_failure);

    rep.rays = data.rays;
    rep.vertex_to_ray.assign(63, -1);
    for (size_t r = 0; r < rep.rays.size(); ++r) {
        uint32_t u = kappa.apply(rep.rays[r]).bits;
        rep.vertex_to_ray[size_t(u - 1)] = int(r);
    }

    auto basis = cholesky_rows(rep.lattice.gram);
    for (const auto& ray : rep.rays) {
        std::vector<double> v(7, 0.0);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) v[size_t(j)] += double(ray[size_t(i)]) * basis[size_t(i)][size_t(j)];
        double norm = std::sqrt(double(rep.lattice.ip(ray, ray)));
        for (auto& x : v) x /= norm;
        rep.real_rays.push_back(std::move(v));
    }
    return rep;
}

std::vector<RepresentationRow> representation_table(const OrthonormalRep& rep) {
    auto spread = spread_partition(3);
    std::vector<RepresentationRow> rows;
    for (size_t frame = 0; frame < spread.cells.cells.size(); ++frame) {
        for (int vertex : spread.cells.cells[frame]) {
            uint32_t mask = sp_vertex_mask(vertex);
            int ray = rep.vertex_to_ray[size_t(vertex)];
            RepresentationRow row;
            row.frame = int(frame) + 1;
            row.coords = rep.rays[size_t(ray)];
            row.real = rep.real_rays[size_t(ray)];
            row.f26 = Gf2Vec(mask, 6).str();
            row.pauli = pauli_label(mask, 3);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string representation_table_csv(const std::vector<RepresentationRow>& rows) {
    std::ostringstream os;
    os << "frame,lattice_coords,real_coords,f2_6,pauli\n";
    for (const auto& row : rows) {
        os << row.frame << ",\"(";
        for (size_t i = 0; i < row.coords.size(); ++i) os << (i ? "," : "") << row.coords[i];
        os << ")\",\"(";
        for (size_t i = 0; i < row.real.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", row.real[i]);
            os << (i ? "," : "") << buf;
        }
        os << ")\"," << row.f26 << "," << row.pauli << "\n";
    }
    return os.str();
}

nlohmann::json representation_table_json(const std::vector<RepresentationRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        arr.push_back({{"frame", row.frame},
                       {"lattice_coords", row.coords},
                       {"real_coords", row.real},
                       {"f2_6", row.f26},
                       {"pauli", row.pauli}});
    }
    return arr;
}

E8FrameResult e8_frame_partition(const E8SymplecticModel& model) {
    E8FrameResult res;
    RootLattice lat = RootLattice::e8();
    res.data = enumerate_roots(lat);
    if (res.data.roots.size() != 240)
        throw std::logic_error("e8_frame_partition: expected 240 roots");

    // ray graph over Gram inner products
    {
        std::vector<std::string> labels;
        for (const auto& r : res.data.rays) {
            std::ostringstream os;
            os << "(";
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << ")";
            labels.push_back(os.str());
        }
        Graph g(int(res.data.rays.size()), labels);
        for (size_t i = 0; i < res.data.rays.size(); ++i)
            for (size_t j = i + 1; j < res.data.rays.size(); ++j)
                if (lat.ip(res.data.rays[i], res.data.rays[j]) == 0) g.add_edge(int(i), int(j));
        res.ray_graph = std::move(g);
    }

    // kappa_8: coordinates mod 2; q(v) = <lift,lift>/2 mod 2 on the 0/1 lift
    auto lift = [&](uint32_t mask) {
        LatticeCoords c(8, 0);
        for (int i = 0; i < 8; ++i) c[size_t(i)] = (mask >> i) & 1;
        return c;
    };
    auto source = BilinearFormSpace::quadratic(
        8, [&](uint32_t v) { return int(r_poly(lat, lift(v)) % 2); });
    res.isotropic_count = source.isotropic_count();

    std::vector<uint32_t> kappa8(res.data.rays.size());
    std::set<uint32_t> image;
    for (size_t r = 0; r < res.data.rays.size(); ++r) {
        uint32_t mask = 0;
        for (int i = 0; i < 8; ++i)
            if (((res.data.rays[r][size_t(i)] % 2) + 2) % 2) mask |= (1u << i);
        kappa8[r] = mask;
        if (source.q(mask) != 1)
            throw std::logic_error("e8_frame_partition: ray image is isotropic");
        image.insert(mask);
    }
    if (image.size() != res.data.rays.size())
        throw std::logic_error("e8_frame_partition: kappa_8 is not injective on rays");
    if (static_cast<long long>(image.size()) != source.nonisotropic_count())
        throw std::logic_error("e8_frame_partition: kappa_8 image misses non-isotropic points");

    // adjacency correspondence: <g,d> = 0 iff the polarization vanishes
    for (size_t a = 0; a < res.data.rays.size(); ++a)
        for (size_t b = a + 1; b < res.data.rays.size(); ++b) {
            bool orth = (lat.ip(res.data.rays[a], res.data.rays[b]) == 0);
            bool bzero = (source.bform(kappa8[a], kappa8[b]) == 0);
            if (orth != bzero)
                throw std::logic_error("e8_frame_partition: adjacency correspondence failed");
        }

    // target: (F_16^2, Tr(xy)) with (x,y) packed as low/high 4 bits
    const GfField& f = GfField::of(4);
    auto targetq = BilinearFormSpace::quadratic(8, [&](uint32_t v) {
        return f.trace(f.mul(v & 15, v >> 4));
    });
    LinearMapGf2 witt = witt_isometry(source, targetq);

    // compose with the model's field-to-canonical map and pull the restricted
    // spread back to rays
    std::map<uint32_t, int> model_index;
    for (size_t i = 0; i < model.vertex_masks.size(); ++i)
        model_index[model.vertex_masks[i]] = int(i);

    res.ray_to_model_vertex.assign(res.data.rays.size(), -1);
    std::vector<std::vector<int>> cells(model.cells.cells.size());
    std::vector<int> cell_of_vertex(model.vertex_masks.size(), -1);
    for (size_t ci = 0; ci < model.cells.cells.size(); ++ci)
        for (int v : model.cells.cells[ci]) cell_of_vertex[size_t(v)] = int(ci);

    for (size_t r = 0; r < res.data.rays.size(); ++r) {
        uint32_t field_mask = witt.apply(kappa8[r]);
        uint32_t canon = model.field_to_canonical.apply(field_mask);
        auto it = model_index.find(canon);
        if (it == model_index.end())
            throw std::logic_error("e8_frame_partition: transferred ray misses the model");
        res.ray_to_model_vertex[r] = it->second;
        cells[size_t(cell_of_vertex[size_t(it->second)])].push_back(int(r));
    }
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    res.cells.cells = std::move(cells);
    return res;
}

}  // namespace zecap
