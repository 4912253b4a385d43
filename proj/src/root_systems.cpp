#include "zecap/root_systems.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zecap/field.hpp"

namespace zecap {

namespace {

long long idot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string ray_label(const std::vector<long long>& r) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

std::vector<long long> canonical_ray(std::vector<long long> v) {
    for (long long x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

std::vector<long long> primitive_ray(std::vector<long long> v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// Rays are sign-canonicalized and sorted by their primitive form, so graphs
// that differ only by root scaling (B_n vs C_n) come out with identical
// adjacency.
RayGraph make_ray_graph(std::vector<std::vector<long long>> rays) {
    for (auto& r : rays) r = canonical_ray(std::move(r));
    std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) {
        return primitive_ray(a) < primitive_ray(b);
    });
    for (size_t i = 0; i + 1 < rays.size(); ++i)
        if (primitive_ray(rays[i]) == primitive_ray(rays[i + 1]))
            throw std::logic_error("RayGraph: parallel rays");
    std::vector<std::string> labels;
    for (const auto& r : rays) {
        if (idot(r, r) == 0) throw std::logic_error("RayGraph: zero ray");
        labels.push_back(ray_label(r));
    }
    Graph g(int(rays.size()), labels);
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (idot(rays[i], rays[j]) == 0) g.add_edge(int(i), int(j));
    return {std::move(rays), std::move(g)};
}

std::vector<long long> unit(int dim, int i, long long c = 1) {
    std::vector<long long> v(size_t(dim), 0);
    v[size_t(i - 1)] = c;
    return v;
}

std::vector<long long> pm(int dim, int i, int j, int sign) {
    std::vector<long long> v(size_t(dim), 0);
    v[size_t(i - 1)] = 1;
    v[size_t(j - 1)] = sign;
    return v;
}

}  // namespace

RootFamily root_family_from_string(const std::string& s) {
    if (s == "A" || s == "a") return RootFamily::A;
    if (s == "B" || s == "b") return RootFamily::B;
    if (s == "C" || s == "c") return RootFamily::C;
    if (s == "D" || s == "d") return RootFamily::D;
    if (s == "G2" || s == "g2") return RootFamily::G2;
    if (s == "E8" || s == "e8") return RootFamily::E8;
    throw std::invalid_argument("unknown root family: " + s);
}

RayGraph build_root_graph(RootFamily family, int n) {
    std::vector<std::vector<long long>> rays;
    switch (family) {
        case RootFamily::A: {
            if (n < 1 || n > 8) throw std::invalid_argument("A_n requires 1 <= n <= 8");
            for (int i = 1; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 1; ++j) rays.push_back(pm(n + 1, i, j, -1));
            break;
        }
        case RootFamily::B:
        case RootFamily::C: {
            if (n < 2 || n > 8) throw std::invalid_argument("B_n/C_n requires 2 <= n <= 8");
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    rays.push_back(pm(n, i, j, 1));
                    rays.push_back(pm(n, i, j, -1));
                }
            long long c = (family == RootFamily::C) ? 2 : 1;
            for (int i = 1; i <= n; ++i) rays.push_back(unit(n, i, c));
            break;
        }
        case RootFamily::D: {
            if (n < 4 || n > 8) throw std::invalid_argument("D_n requires 4 <= n <= 8");
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    rays.push_back(pm(n, i, j, 1));
                    rays.push_back(pm(n, i, j, -1));
                }
            break;
        }
        case RootFamily::G2: {
            rays = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -2}, {1, -2, 1}, {-2, 1, 1}};
            break;
        }
        case RootFamily::E8: {
            for (int i = 1; i <= 8; ++i)
                for (int j = i + 1; j <= 8; ++j) {
                    rays.push_back(pm(8, i, j, 1));
                    rays.push_back(pm(8, i, j, -1));
                }
            // sign classes with product +1; first coordinate +1 picks one
            // representative per antipodal pair (negation fixes the parity)
            for (uint32_t s = 0; s < 256; s += 2) {
                if (__builtin_parity(s)) continue;  // even number of -1 entries
                std::vector<long long> v(8);
                for (int i = 0; i < 8; ++i) v[size_t(i)] = ((s >> i) & 1) ? -1 : 1;
                rays.push_back(std::move(v));
            }
            break;
        }
    }
    return make_ray_graph(std::move(rays));
}

CliquePartition bn_partition(int n) {
    if (n < 2) throw std::invalid_argument("bn_partition: n >= 2");
    RayGraph bg = build_root_graph(RootFamily::B, n);
    std::map<std::vector<long long>, int> index;
    for (size_t i = 0; i < bg.rays.size(); ++i) index[bg.rays[i]] = int(i);
    auto at = [&](std::vector<long long> v) {
        auto it = index.find(canonical_ray(std::move(v)));
        if (it == index.end()) throw std::logic_error("bn_partition: ray not found");
        return it->second;
    };

    CliquePartition part;
    if (n % 2 == 1) {
        // pi_k = {e_i +- e_j : i < j, i + j = 2k (mod n)} + {e_k}
        for (int k = 1; k <= n; ++k) {
            std::vector<int> cell;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if ((i + j) % n == (2 * k) % n) {
                        cell.push_back(at(pm(n, i, j, 1)));
                        cell.push_back(at(pm(n, i, j, -1)));
                    }
            cell.push_back(at(unit(n, k)));
            part.cells.push_back(std::move(cell));
        }
    } else {
        // pi_k = {e_i +- e_j : i < j <= n-1, i + j = 2k (mod n-1)} + {e_k +- e_n},
        // pi_n = {e_1..e_n}
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<int> cell;
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i + 1; j <= n - 1; ++j)
                    if ((i + j) % (n - 1) == (2 * k) % (n - 1)) {
                        cell.push_back(at(pm(n, i, j, 1)));
                        cell.push_back(at(pm(n, i, j, -1)));
                    }
            cell.push_back(at(pm(n, k, n, 1)));
            cell.push_back(at(pm(n, k, n, -1)));
            part.cells.push_back(std::move(cell));
        }
        std::vector<int> last;
        for (int i = 1; i <= n; ++i) last.push_back(at(unit(n, i)));
        part.cells.push_back(std::move(last));
    }
    for (auto& cell : part.cells) std::sort(cell.begin(), cell.end());
    return part;
}

GraphMap an_kneser_map(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("an_kneser_map: 1 <= n <= 8");
    RayGraph ag = build_root_graph(RootFamily::A, n);
    Graph kg = kneser_graph_2(n + 1);
    auto pairs = kneser_pairs(n + 1);
    std::map<std::pair<int, int>, int> pair_index;
    for (size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = int(i);

    std::vector<int> f(ag.rays.size());
    for (size_t r = 0; r < ag.rays.size(); ++r) {
        int i = -1, j = -1;
        for (int c = 0; c < n + 1; ++c) {
            if (ag.rays[r][size_t(c)] != 0) {
                if (i < 0)
                    i = c + 1;
                else
                    j = c + 1;
            }
        }
        f[r] = pair_index.at({i, j});
    }
    return {std::move(kg), std::move(f)};
}

GraphMap dn_factorization_map(int n) {
    if (n < 4 || n > 8) throw std::invalid_argument("dn_factorization_map: 4 <= n <= 8");
    RayGraph dg = build_root_graph(RootFamily::D, n);
    Graph target = strong_product(kneser_graph_2(n), complete_graph(2));
    auto pairs = kneser_pairs(n);
    std::map<std::pair<int, int>, int> pair_index;
    for (size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = int(i);

    // strong_product vertex order: kneser index * 2 + K2 index
    std::vector<int> f(dg.rays.size());
    for (size_t r = 0; r < dg.rays.size(); ++r) {
        int i = -1, j = -1;
        long long sj = 0;
        for (int c = 0; c < n; ++c) {
            long long x = dg.rays[r][size_t(c)];
            if (x != 0) {
                if (i < 0)
                    i = c + 1;
                else {
                    j = c + 1;
                    sj = x;
                }
            }
        }
        int side = (sj > 0) ? 1 : 0;  // e_i + e_j -> 1, e_i - e_j -> 0
        f[r] = pair_index.at({i, j}) * 2 + side;
    }
    return {std::move(target), std::move(f)};
}

E8SymplecticModel e8_symplectic_model() {
    const GfField& f = GfField::of(4);
    const int m = 4;
    E8SymplecticModel model;
    model.field_to_canonical = field_to_canonical_iso(m);

    std::vector<std::pair<uint32_t, uint32_t>> coords_by_mask;
    for (uint32_t x = 0; x < 16; ++x)
        for (uint32_t y = 0; y < 16; ++y) {
            if ((x | y) == 0) continue;
            if (f.trace(f.mul(x, y)) != 1) continue;  // non-isotropic only
            uint32_t mask = model.field_to_canonical.apply(x | (y << m));
            coords_by_mask.emplace_back(mask, x | (y << 8));
        }
    std::sort(coords_by_mask.begin(), coords_by_mask.end());

    for (auto [mask, xy] : coords_by_mask) {
        model.vertex_masks.push_back(mask);
        model.field_coords.emplace_back(xy & 0xff, xy >> 8);
    }

    auto sp8 = build_sp_graph(m);
    std::vector<int> sub;
    for (uint32_t mask : model.vertex_masks) sub.push_back(sp_vertex_index(mask));
    model.graph = induced_subgraph(sp8.graph, sub);

    // restricted spread: cell of (x,y) is a = y / x; x = 0 cannot occur here
    std::map<uint32_t, std::vector<int>> cells;
    for (size_t i = 0; i < model.field_coords.size(); ++i) {
        auto [x, y] = model.field_coords[i];
        if (x == 0) throw std::logic_error("e8_symplectic_model: isotropic point leaked in");
        cells[f.mul(y, f.inv(x))].push_back(int(i));
    }
    for (auto& [a, cell] : cells) model.cells.cells.push_back(cell);
    return model;
}

nlohmann::json ray_graph_to_json(const RayGraph& rg) {
    nlohmann::json j;
    j["rays"] = rg.rays;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : rg.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

}  // namespace zecap
