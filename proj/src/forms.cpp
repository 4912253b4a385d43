#include "zecap/forms.hpp"

#include <string>

namespace zecap {

DegenerateFormError::DegenerateFormError(uint32_t w)
    : std::runtime_error("degenerate form: radical vector mask " + std::to_string(w)), witness(w) {}

InequivalentFormsError::InequivalentFormsError(long long a, long long b)
    : std::runtime_error("inequivalent quadratic forms: isotropic counts " + std::to_string(a) +
                         " vs " + std::to_string(b)),
      count_source(a),
      count_target(b) {}

BilinearFormSpace BilinearFormSpace::symplectic(int dim, const std::vector<uint32_t>& gram_rows) {
    if (dim <= 0 || dim > 20) throw std::invalid_argument("BilinearFormSpace: dim out of range");
    if (int(gram_rows.size()) != dim) throw std::invalid_argument("BilinearFormSpace: bad gram");
    BilinearFormSpace s;
    s.dim = dim;
    s.gram_rows = gram_rows;
    s.kind = FormKind::symplectic;
    for (int i = 0; i < dim; ++i) {
        if ((gram_rows[size_t(i)] >> i) & 1)
            throw std::invalid_argument("symplectic gram must be alternating (zero diagonal)");
        for (int j = 0; j < dim; ++j)
            if (((gram_rows[size_t(i)] >> j) & 1) != ((gram_rows[size_t(j)] >> i) & 1))
                throw std::invalid_argument("gram must be symmetric");
    }
    return s;
}

BilinearFormSpace BilinearFormSpace::quadratic(int dim, const std::function<int(uint32_t)>& qfun) {
    if (dim <= 0 || dim > 20) throw std::invalid_argument("BilinearFormSpace: dim out of range");
    BilinearFormSpace s;
    s.dim = dim;
    s.kind = FormKind::quadratic;
    s.qtable.resize(size_t(1) << dim);
    for (uint32_t v = 0; v < (uint32_t(1) << dim); ++v) {
        int qv = qfun(v);
        if (qv != 0 && qv != 1) throw std::invalid_argument("quadratic values must be 0/1");
        s.qtable[v] = uint8_t(qv);
    }
    if (s.qtable[0] != 0) throw std::invalid_argument("quadratic form must vanish at 0");
    // polarization B(e_i, e_j) = q(e_i + e_j) + q(e_i) + q(e_j)
    s.gram_rows.assign(size_t(dim), 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            int b = s.qtable[(1u << i) ^ (1u << j)] ^ s.qtable[1u << i] ^ s.qtable[1u << j];
            if (b) s.gram_rows[size_t(i)] |= (1u << j);
        }
    // table must actually be quadratic: q(u+v) = q(u)+q(v)+B(u,v)
    for (uint32_t u = 0; u < (uint32_t(1) << dim); ++u)
        for (uint32_t i = 0; i < uint32_t(dim); ++i) {
            uint32_t v = 1u << i;
            if ((s.qtable[u ^ v] ^ s.qtable[u] ^ s.qtable[v]) != s.bform(u, v))
                throw std::invalid_argument("value table is not a quadratic form");
        }
    return s;
}

std::optional<uint32_t> BilinearFormSpace::radical_vector() const {
    for (uint32_t v = 1; v < (uint32_t(1) << dim); ++v) {
        bool rad = true;
        for (int i = 0; i < dim && rad; ++i)
            if (bform(v, 1u << i)) rad = false;
        if (rad) return v;
    }
    return std::nullopt;
}

long long BilinearFormSpace::isotropic_count() const {
    if (kind != FormKind::quadratic) throw std::logic_error("isotropic_count: quadratic spaces only");
    long long c = 0;
    for (uint32_t v = 1; v < (uint32_t(1) << dim); ++v)
        if (qtable[v] == 0) ++c;
    return c;
}

long long BilinearFormSpace::nonisotropic_count() const {
    return (1LL << dim) - 1 - isotropic_count();
}

std::vector<Gf2Vec> SymplecticBasis::as_vectors(int dim) const {
    std::vector<Gf2Vec> out;
    for (uint32_t m : a) out.emplace_back(m, dim);
    for (uint32_t m : b) out.emplace_back(m, dim);
    return out;
}

SymplecticBasis symplectic_basis(const BilinearFormSpace& space) {
    if (space.kind != FormKind::symplectic)
        throw std::invalid_argument("symplectic_basis: space must be symplectic");
    if (space.dim % 2 != 0) throw std::invalid_argument("symplectic_basis: dimension must be even");
    if (auto rad = space.radical_vector()) throw DegenerateFormError(*rad);

    // Working generators of the current complement; start from the standard basis.
    std::vector<uint32_t> gens;
    for (int i = 0; i < space.dim; ++i) gens.push_back(1u << i);

    SymplecticBasis basis;
    while (!gens.empty()) {
        uint32_t a = gens[0];
        int partner = -1;
        for (size_t j = 1; j < gens.size(); ++j)
            if (space.bform(a, gens[j])) {
                partner = int(j);
                break;
            }
        if (partner < 0) throw DegenerateFormError(a);  // unreachable for non-degenerate forms
        uint32_t b = gens[size_t(partner)];
        basis.a.push_back(a);
        basis.b.push_back(b);
        std::vector<uint32_t> next;
        for (size_t j = 1; j < gens.size(); ++j) {
            if (int(j) == partner) continue;
            uint32_t v = gens[j];
            if (space.bform(v, b)) v ^= a;
            if (space.bform(v, a)) v ^= b;
            next.push_back(v);
        }
        gens = std::move(next);
    }
    return basis;
}

LinearMapGf2 LinearMapGf2::from_basis_images(int dim, const std::vector<uint32_t>& src_basis,
                                             const std::vector<uint32_t>& dst_basis) {
    if (src_basis.size() != dst_basis.size())
        throw std::invalid_argument("from_basis_images: basis size mismatch");
    // L = D * S^{-1} with S, D holding the bases as columns.
    LinearMapGf2 s{dim, dim, src_basis};
    LinearMapGf2 sinv = s.inverse();
    LinearMapGf2 d{dim, dim, dst_basis};
    LinearMapGf2 out{dim, dim, std::vector<uint32_t>(size_t(dim), 0)};
    for (int i = 0; i < dim; ++i) out.cols[size_t(i)] = d.apply(sinv.cols[size_t(i)]);
    return out;
}

LinearMapGf2 LinearMapGf2::inverse() const {
    if (dim_in != dim_out) throw std::invalid_argument("inverse: map must be square");
    int n = dim_in;
    // Gauss-Jordan on rows of [M | I] where row r of M is bit r of each column.
    std::vector<uint64_t> aug(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        uint64_t row = 0;
        for (int c = 0; c < n; ++c)
            if ((cols[size_t(c)] >> r) & 1) row |= (uint64_t(1) << c);
        aug[size_t(r)] = row | (uint64_t(1) << (n + r));
    }
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if ((aug[size_t(r)] >> c) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("inverse: singular map");
        std::swap(aug[size_t(rank)], aug[size_t(pivot)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && ((aug[size_t(r)] >> c) & 1)) aug[size_t(r)] ^= aug[size_t(rank)];
        ++rank;
    }
    LinearMapGf2 inv{n, n, std::vector<uint32_t>(size_t(n), 0)};
    for (int r = 0; r < n; ++r) {
        uint32_t invrow = uint32_t(aug[size_t(r)] >> n);
        for (int c = 0; c < n; ++c)
            if ((invrow >> c) & 1) inv.cols[size_t(c)] |= (1u << r);
    }
    return inv;
}

namespace {

struct WittPair {
    uint32_t x, y;
    bool anisotropic;
};

// Decompose a non-degenerate quadratic space into B-orthogonal hyperbolic
// planes, possibly ending in one anisotropic plane. Deterministic: subspace
// elements are scanned in coefficient-mask order over the evolving generator
// list.
std::vector<WittPair> witt_decompose(const BilinearFormSpace& space) {
    std::vector<uint32_t> gens;
    for (int i = 0; i < space.dim; ++i) gens.push_back(1u << i);
    std::vector<WittPair> pairs;

    auto elements = [&](const std::vector<uint32_t>& g) {
        std::vector<uint32_t> out;
        for (uint32_t c = 1; c < (uint32_t(1) << g.size()); ++c) {
            uint32_t v = 0;
            for (size_t i = 0; i < g.size(); ++i)
                if ((c >> i) & 1) v ^= g[i];
            out.push_back(v);
        }
        return out;
    };

    while (!gens.empty()) {
        auto elems = elements(gens);
        uint32_t x = 0;
        bool found = false;
        for (uint32_t v : elems)
            if (v != 0 && space.q(v) == 0) {
                x = v;
                found = true;
                break;
            }
        if (!found) {
            // anisotropic remainder: must be a plane
            if (gens.size() != 2)
                throw std::logic_error("witt_decompose: anisotropic part larger than a plane");
            uint32_t u = gens[0];
            uint32_t v = 0;
            for (uint32_t w : elems)
                if (space.bform(u, w)) {
                    v = w;
                    break;
                }
            if (v == 0) throw DegenerateFormError(u);
            pairs.push_back({u, v, true});
            break;
        }
        uint32_t y = 0;
        for (uint32_t w : elems)
            if (space.bform(x, w)) {
                y = w;
                break;
            }
        if (y == 0) throw DegenerateFormError(x);
        if (space.q(y)) y ^= x;  // q(y + x) = q(y) + B(x,y) = q(y) + 1
        pairs.push_back({x, y, false});

        // project remaining generators into the B-orthogonal complement of {x,y}
        std::vector<uint32_t> next;
        uint32_t piv[32] = {0};
        auto reduce = [&](uint32_t v) {
            while (v) {
                int hb = 31 - __builtin_clz(v);
                if (!piv[hb]) break;
                v ^= piv[hb];
            }
            return v;
        };
        for (uint32_t g : gens) {
            uint32_t v = g;
            if (space.bform(v, y)) v ^= x;
            if (space.bform(v, x)) v ^= y;
            uint32_t r = reduce(v);
            if (r != 0 && next.size() < gens.size() - 2) {
                piv[31 - __builtin_clz(r)] = r;
                next.push_back(v);
            }
        }
        if (next.size() != gens.size() - 2)
            throw std::logic_error("witt_decompose: complement dimension drop");
        gens = std::move(next);
    }
    return pairs;
}

}  // namespace

LinearMapGf2 witt_isometry(const BilinearFormSpace& source, const BilinearFormSpace& target) {
    if (source.kind != FormKind::quadratic || target.kind != FormKind::quadratic)
        throw std::invalid_argument("witt_isometry: both spaces must be quadratic");
    if (source.dim != target.dim) throw std::invalid_argument("witt_isometry: dimension mismatch");
    if (source.dim % 2 != 0) throw std::invalid_argument("witt_isometry: dimension must be even");
    if (auto rad = source.radical_vector()) throw DegenerateFormError(*rad);
    if (auto rad = target.radical_vector()) throw DegenerateFormError(*rad);

    long long iso_s = source.isotropic_count();
    long long iso_t = target.isotropic_count();
    if (iso_s != iso_t) throw InequivalentFormsError(iso_s, iso_t);

    auto ps = witt_decompose(source);
    auto pt = witt_decompose(target);
    if (ps.size() != pt.size()) throw std::logic_error("witt_isometry: decomposition shape mismatch");
    std::vector<uint32_t> src_basis, dst_basis;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].anisotropic != pt[i].anisotropic)
            throw std::logic_error("witt_isometry: Witt types disagree after count check");
        src_basis.push_back(ps[i].x);
        src_basis.push_back(ps[i].y);
        dst_basis.push_back(pt[i].x);
        dst_basis.push_back(pt[i].y);
    }
    LinearMapGf2 L = LinearMapGf2::from_basis_images(source.dim, src_basis, dst_basis);
    for (uint32_t v = 0; v < (uint32_t(1) << source.dim); ++v)
        if (target.q(L.apply(v)) != source.q(v))
            throw std::logic_error("witt_isometry: q-preservation failed at mask " + std::to_string(v));
    return L;
}

}  // namespace zecap
