#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zecap/bits.hpp"

namespace zecap {

enum class FormKind { symplectic, quadratic };

// Bilinear-form space over GF(2): F_2^dim with B(u,v) = u^T G v given by a Gram
// matrix on the standard basis. Quadratic spaces carry a value table whose
// polarization q(u+v)+q(u)+q(v) equals the Gram form.
struct BilinearFormSpace {
    int dim = 0;
    std::vector<uint32_t> gram_rows;  // row i as bitmask over columns
    FormKind kind = FormKind::symplectic;
    std::vector<uint8_t> qtable;  // 1<<dim entries when quadratic

    int bform(uint32_t u, uint32_t v) const {
        int s = 0;
        uint32_t uu = u;
        while (uu) {
            int i = __builtin_ctz(uu);
            uu &= uu - 1;
            s ^= __builtin_parity(gram_rows[size_t(i)] & v);
        }
        return s;
    }
    int q(uint32_t v) const { return qtable[v]; }

    static BilinearFormSpace symplectic(int dim, const std::vector<uint32_t>& gram_rows);
    static BilinearFormSpace quadratic(int dim, const std::function<int(uint32_t)>& qfun);

    // Nonzero v with B(v,.) identically zero, if any.
    std::optional<uint32_t> radical_vector() const;
    // Number of nonzero isotropic vectors (q = 0); quadratic spaces only.
    long long isotropic_count() const;
    long long nonisotropic_count() const;
};

struct DegenerateFormError : std::runtime_error {
    uint32_t witness;
    explicit DegenerateFormError(uint32_t w);
};

struct InequivalentFormsError : std::runtime_error {
    long long count_source, count_target;
    InequivalentFormsError(long long a, long long b);
};

// Hyperbolic basis (a_1..a_m, b_1..b_m) with B(a_i,b_j)=delta_ij and
// B(a_i,a_j)=B(b_i,b_j)=0, as coordinate masks. Deterministic lowest-index
// pivoting. Throws DegenerateFormError naming a radical vector.
struct SymplecticBasis {
    std::vector<uint32_t> a, b;
    std::vector<Gf2Vec> as_vectors(int dim) const;  // (a_1..a_m, b_1..b_m)
};
SymplecticBasis symplectic_basis(const BilinearFormSpace& space);

// Invertible linear map on GF(2) coordinate masks, stored by columns.
struct LinearMapGf2 {
    int dim_in = 0, dim_out = 0;
    std::vector<uint32_t> cols;  // image of e_i

    uint32_t apply(uint32_t v) const {
        uint32_t r = 0;
        while (v) {
            int i = __builtin_ctz(v);
            v &= v - 1;
            r ^= cols[size_t(i)];
        }
        return r;
    }
    LinearMapGf2 inverse() const;  // square maps only; throws if singular
    static LinearMapGf2 from_basis_images(int dim, const std::vector<uint32_t>& src_basis,
                                          const std::vector<uint32_t>& dst_basis);
};

// Isometry L between non-degenerate quadratic spaces of equal even dimension
// and equal Witt type: q_target(L v) = q_source(v) for all v. Built by matching
// hyperbolic/Witt decompositions. Throws InequivalentFormsError when the
// isotropic counts differ.
LinearMapGf2 witt_isometry(const BilinearFormSpace& source, const BilinearFormSpace& target);

}  // namespace zecap
