#include "zecap/symplectic.hpp"

#include <cmath>
#include <deque>

#include "zecap/field.hpp"
#include "zecap/mis.hpp"

namespace zecap {

namespace {
void check_m(int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("symplectic: m must be in 1..4");
}
}  // namespace

std::string pauli_label(uint32_t mask, int m) {
    static const char* table = "IXZY";  // indexed by x + 2z
    std::string s;
    for (int i = 0; i < m; ++i) {
        int x = int((mask >> i) & 1);
        int z = int((mask >> (m + i)) & 1);
        s += table[x + 2 * z];
    }
    return s;
}

SymplecticGraph build_sp_graph(int m, bool pauli_labels) {
    check_m(m);
    int n = (1 << (2 * m)) - 1;
    std::vector<std::string> labels;
    labels.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
        Gf2Vec v(sp_vertex_mask(i), 2 * m);
        labels.push_back(pauli_labels ? pauli_label(v.bits, m) : v.str());
    }
    Graph g(n, labels);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sigma_mask(sp_vertex_mask(i), sp_vertex_mask(j), m) == 0) g.add_edge(i, j);
    return {m, std::move(g)};
}

LinearMapGf2 field_to_canonical_iso(int m) {
    check_m(m);
    const GfField& f = GfField::of(m);
    int dim = 2 * m;
    // basis e_i of the coordinate space = (monomial x parts, monomial y parts)
    std::vector<uint32_t> gram(size_t(dim), 0);
    auto unpack = [&](uint32_t v) {
        return std::pair<FieldElement, FieldElement>{f.el(v & (f.order() - 1)), f.el(v >> m)};
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (sigma_field(unpack(1u << i), unpack(1u << j))) gram[size_t(i)] |= (1u << j);

    auto basis = symplectic_basis(BilinearFormSpace::symplectic(dim, gram));
    // coordinates in the (a,b) basis == canonical coordinates, so the
    // field-to-canonical map is the inverse of the basis-as-columns matrix
    std::vector<uint32_t> cols;
    cols.insert(cols.end(), basis.a.begin(), basis.a.end());
    cols.insert(cols.end(), basis.b.begin(), basis.b.end());
    return LinearMapGf2{dim, dim, cols}.inverse();
}

Spread spread_partition(int m) {
    check_m(m);
    const GfField& f = GfField::of(m);
    uint32_t N = f.order();
    LinearMapGf2 phi = field_to_canonical_iso(m);
    int n = (1 << (2 * m)) - 1;

    Spread spread;
    spread.field_model.assign(size_t(n), {0, 0});
    auto to_vertex = [&](uint32_t x, uint32_t y) {
        uint32_t mask = phi.apply(x | (y << m));
        int idx = sp_vertex_index(mask);
        spread.field_model[size_t(idx)] = {x, y};
        return idx;
    };

    for (uint32_t a = 0; a < N; ++a) {  // pi_a = {(x, ax) : x != 0}
        std::vector<int> cell;
        for (uint32_t x = 1; x < N; ++x) cell.push_back(to_vertex(x, f.mul(a, x)));
        spread.cells.cells.push_back(std::move(cell));
    }
    std::vector<int> last;  // pi_{N+1} = {(0, x) : x != 0}
    for (uint32_t x = 1; x < N; ++x) last.push_back(to_vertex(0, x));
    spread.cells.cells.push_back(std::move(last));
    return spread;
}

Gf2Matrix fitting_matrix(int m) {
    check_m(m);
    int n = (1 << (2 * m)) - 1;
    Gf2Matrix mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mat.set(i, j, 1 ^ sigma_mask(sp_vertex_mask(i), sp_vertex_mask(j), m));
    return mat;
}

std::vector<Gf2Vec> u_space_isomorphism(int m) {
    check_m(m);
    int dim = 2 * m, ambient = 2 * m + 1;
    // Basis of U_m (even-weight subspace of F_2^{2m+1}): greedy independent
    // even-weight masks in ascending order; lands on e_1+e_k, k = 2..2m+1.
    std::vector<uint32_t> basis;
    std::vector<uint32_t> piv(size_t(ambient), 0);
    for (uint32_t v = 1; v < (1u << ambient) && int(basis.size()) < dim; ++v) {
        if (__builtin_popcount(v) % 2) continue;
        uint32_t r = v;
        while (r) {
            int hb = 31 - __builtin_clz(r);
            if (!piv[size_t(hb)]) break;
            r ^= piv[size_t(hb)];
        }
        if (r) {
            piv[size_t(31 - __builtin_clz(r))] = r;
            basis.push_back(v);
        }
    }

    std::vector<uint32_t> gram(size_t(dim), 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (__builtin_parity(basis[size_t(i)] & basis[size_t(j)])) gram[size_t(i)] |= (1u << j);
    auto ub = symplectic_basis(BilinearFormSpace::symplectic(dim, gram));
    auto cb = symplectic_basis(BilinearFormSpace::symplectic(dim, [&] {
        std::vector<uint32_t> g(size_t(dim), 0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (canonical_sigma(Gf2Vec(1u << i, dim), Gf2Vec(1u << j, dim)))
                    g[size_t(i)] |= (1u << j);
        return g;
    }()));

    // T e_i = image of the i-th canonical symplectic basis vector, expressed
    // in ambient coordinates through the U_m basis.
    auto to_ambient = [&](uint32_t abstract_mask) {
        uint32_t v = 0;
        for (int i = 0; i < dim; ++i)
            if ((abstract_mask >> i) & 1) v ^= basis[size_t(i)];
        return v;
    };
    std::vector<uint32_t> canon_cols, u_cols;
    canon_cols.insert(canon_cols.end(), cb.a.begin(), cb.a.end());
    canon_cols.insert(canon_cols.end(), cb.b.begin(), cb.b.end());
    u_cols.reserve(size_t(dim));
    for (uint32_t am : ub.a) u_cols.push_back(to_ambient(am));
    for (uint32_t bm : ub.b) u_cols.push_back(to_ambient(bm));

    // columns of T = U * C^{-1}
    LinearMapGf2 cinv = LinearMapGf2{dim, dim, canon_cols}.inverse();
    std::vector<Gf2Vec> t_cols;
    for (int i = 0; i < dim; ++i) {
        uint32_t coeff = cinv.apply(1u << i);
        uint32_t v = 0;
        for (int j = 0; j < dim; ++j)
            if ((coeff >> j) & 1) v ^= u_cols[size_t(j)];
        t_cols.emplace_back(v, ambient);
    }
    return t_cols;
}

std::vector<int> canonical_independent_set(int m) {
    check_m(m);
    int dim = 2 * m, ambient = 2 * m + 1;
    auto t_cols = u_space_isomorphism(m);

    // invert T on its image: solve T u = f_i for each f_i = e_i + 1
    uint32_t ones = (1u << ambient) - 1;
    std::vector<int> verts;
    for (int i = 0; i < ambient; ++i) {
        uint32_t target = (1u << i) ^ ones;
        // brute solve over the 2^{2m} domain is fine at desk scale, but use
        // elimination for determinism and speed
        std::vector<uint64_t> rows(size_t(ambient), 0);
        for (int r = 0; r < ambient; ++r) {
            uint64_t row = 0;
            for (int c = 0; c < dim; ++c)
                if (t_cols[size_t(c)].get(r)) row |= (uint64_t(1) << c);
            if ((target >> r) & 1) row |= (uint64_t(1) << dim);
            rows[size_t(r)] = row;
        }
        int rank = 0;
        for (int c = 0; c < dim; ++c) {
            int pivot = -1;
            for (int r = rank; r < ambient; ++r)
                if ((rows[size_t(r)] >> c) & 1) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::logic_error("canonical_independent_set: T not injective");
            std::swap(rows[size_t(rank)], rows[size_t(pivot)]);
            for (int r = 0; r < ambient; ++r)
                if (r != rank && ((rows[size_t(r)] >> c) & 1)) rows[size_t(r)] ^= rows[size_t(rank)];
            ++rank;
        }
        for (int r = rank; r < ambient; ++r)
            if (rows[size_t(r)] != 0) throw std::logic_error("canonical_independent_set: f_i outside image of T");
        uint32_t u = 0;
        for (int r = 0; r < rank; ++r) {
            int c = __builtin_ctzll(rows[size_t(r)]);
            if ((rows[size_t(r)] >> dim) & 1) u |= (1u << c);
        }
        verts.push_back(sp_vertex_index(u));
    }
    return verts;
}

TransitivityReport verify_vertex_transitive(int m) {
    check_m(m);
    int n = (1 << (2 * m)) - 1;
    TransitivityReport rep;

    // transvections T_v(x) = x + sigma(x,v) v preserve sigma
    rep.sigma_preserved = true;
    for (uint32_t v = 1; v <= uint32_t(n) && rep.sigma_preserved; ++v) {
        for (uint32_t x = 1; x <= uint32_t(n) && rep.sigma_preserved; x += 7) {
            for (uint32_t y = 1; y <= uint32_t(n); y += 5) {
                uint32_t tx = x ^ (sigma_mask(x, v, m) ? v : 0);
                uint32_t ty = y ^ (sigma_mask(y, v, m) ? v : 0);
                if (sigma_mask(tx, ty, m) != sigma_mask(x, y, m)) {
                    rep.sigma_preserved = false;
                    break;
                }
            }
        }
    }

    std::vector<char> seen(size_t(n) + 1, 0);
    std::deque<uint32_t> queue{1};
    seen[1] = 1;
    int orbit = 1;
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t v = 1; v <= uint32_t(n); ++v) {
            uint32_t y = x ^ (sigma_mask(x, v, m) ? v : 0);
            if (!seen[y]) {
                seen[y] = 1;
                ++orbit;
                queue.push_back(y);
            }
        }
    }
    rep.orbit_size = orbit;
    rep.transitive = (orbit == n);
    return rep;
}

SpCertificate capacity_certificate_sp(int m) {
    check_m(m);
    SpCertificate cert;
    cert.m = m;
    auto sp = build_sp_graph(m);
    auto ind = canonical_independent_set(m);
    if (!is_independent_set(sp.graph, ind))
        throw std::logic_error("capacity_certificate_sp: canonical set is not independent");
    cert.alpha_lower = int(ind.size());
    cert.rank_upper = gf2_rank(fitting_matrix(m));
    cert.equal = (cert.alpha_lower == cert.rank_upper);
    cert.capacity_log2 = std::log2(double(cert.rank_upper));
    return cert;
}

nlohmann::json certificate_to_json(const SpCertificate& c) {
    return {{"m", c.m},
            {"alpha_lower", c.alpha_lower},
            {"rank_upper", c.rank_upper},
            {"equal", c.equal},
            {"capacity_log2", c.capacity_log2}};
}

}  // namespace zecap
