#include <random>

#include "doctest.h"
#include "zecap/bits.hpp"
#include "zecap/field.hpp"
#include "zecap/forms.hpp"
#include "zecap/gf2.hpp"

using namespace zecap;

TEST_CASE("gf2_rank basics") {
    CHECK(gf2_rank(Gf2Matrix::identity(3)) == 3);
    Gf2Matrix ones(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.set(i, j, 1);
    CHECK(gf2_rank(ones) == 1);
}

TEST_CASE("kronecker rank multiplicativity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 25; ++trial) {
        Gf2Matrix a(4, 4), b(5, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a.set(i, j, bit(rng));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) b.set(i, j, bit(rng));
        CHECK(gf2_rank(gf2_kron(a, b)) == gf2_rank(a) * gf2_rank(b));
    }
}

TEST_CASE("field multiplication") {
    const GfField& f4 = GfField::of(2);
    CHECK(f4.el(0b10) * f4.el(0b10) == f4.el(0b11));  // x*x = x+1 in GF(4)
    const GfField& f16 = GfField::of(4);
    CHECK(f16.el(0b1000) * f16.el(0b10) == f16.el(0b11));  // x^3*x = x+1 in GF(16)
    for (int m = 1; m <= 4; ++m) {
        const GfField& f = GfField::of(m);
        for (uint32_t a = 0; a < f.order(); ++a) CHECK(f.el(a) * f.one() == f.el(a));
    }
    // commutative/associative/distributive, exhaustive for m <= 3
    for (int m = 1; m <= 3; ++m) {
        const GfField& f = GfField::of(m);
        for (uint32_t a = 0; a < f.order(); ++a)
            for (uint32_t b = 0; b < f.order(); ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (uint32_t c = 0; c < f.order(); ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
                }
            }
    }
    CHECK_THROWS(GfField::of(2).el(1) * GfField::of(3).el(1));
}

TEST_CASE("field inverse") {
    for (int m = 1; m <= 4; ++m) {
        const GfField& f = GfField::of(m);
        for (uint32_t a = 1; a < f.order(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK_THROWS(f.inv(0));
    }
}

TEST_CASE("trace") {
    for (int m = 1; m <= 4; ++m) CHECK(GfField::of(m).trace(0) == 0);
    CHECK(GfField::of(2).el(0b10).trace() == 1);  // Tr(x) in GF(4)
    CHECK(GfField::of(3).el(1).trace() == 1);     // Tr(1) in GF(8), odd m
    for (int m = 1; m <= 4; ++m) {
        const GfField& f = GfField::of(m);
        for (uint32_t a = 0; a < f.order(); ++a) {
            CHECK(f.trace(f.mul(a, a)) == f.trace(a));
            for (uint32_t b = 0; b < f.order(); ++b)
                CHECK(f.trace(a ^ b) == (f.trace(a) ^ f.trace(b)));
        }
        // trace is onto GF(2): some element has trace 1
        bool hit = false;
        for (uint32_t a = 0; a < f.order(); ++a)
            if (f.trace(a) == 1) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("canonical sigma") {
    for (int m = 1; m <= 4; ++m) {
        Gf2Vec e1(1, 2 * m), em1(1u << m, 2 * m);
        CHECK(canonical_sigma(e1, em1) == 1);
    }
    CHECK(canonical_sigma(Gf2Vec(0b10, 2), Gf2Vec(0b11, 2)) == 1);  // sigma((0,1),(1,1))
    CHECK_THROWS(canonical_sigma(Gf2Vec(1, 3), Gf2Vec(1, 3)));
    CHECK_THROWS(canonical_sigma(Gf2Vec(1, 2), Gf2Vec(1, 4)));
    // alternating and bilinear, exhaustive m <= 3
    for (int m = 1; m <= 3; ++m) {
        int dim = 2 * m;
        for (uint32_t u = 0; u < (1u << dim); ++u) {
            CHECK(canonical_sigma(Gf2Vec(u, dim), Gf2Vec(u, dim)) == 0);
            for (uint32_t v = 0; v < (1u << dim); ++v)
                for (uint32_t w = 0; w < (1u << dim); w += 3) {
                    int lhs = canonical_sigma(Gf2Vec(u ^ v, dim), Gf2Vec(w, dim));
                    int rhs = canonical_sigma(Gf2Vec(u, dim), Gf2Vec(w, dim)) ^
                              canonical_sigma(Gf2Vec(v, dim), Gf2Vec(w, dim));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("sigma_N") {
    const GfField& f8 = GfField::of(3);
    CHECK(sigma_field({f8.one(), f8.zero()}, {f8.zero(), f8.one()}) == 1);
    for (int m = 1; m <= 3; ++m) {
        const GfField& f = GfField::of(m);
        // same spread cell: sigma_N((x,ax),(y,ay)) = 0
        for (uint32_t a = 0; a < f.order(); ++a)
            for (uint32_t x = 0; x < f.order(); ++x)
                for (uint32_t y = 0; y < f.order(); ++y)
                    CHECK(sigma_field({f.el(x), f.el(f.mul(a, x))},
                                      {f.el(y), f.el(f.mul(a, y))}) == 0);
        // alternating
        for (uint32_t x = 0; x < f.order(); ++x)
            for (uint32_t y = 0; y < f.order(); ++y)
                CHECK(sigma_field({f.el(x), f.el(y)}, {f.el(x), f.el(y)}) == 0);
        // non-degenerate: every nonzero point has a non-orthogonal partner
        for (uint32_t x = 0; x < f.order(); ++x)
            for (uint32_t y = 0; y < f.order(); ++y) {
                if (x == 0 && y == 0) continue;
                bool found = false;
                for (uint32_t z = 0; z < f.order() && !found; ++z)
                    for (uint32_t w = 0; w < f.order(); ++w)
                        if (sigma_field({f.el(x), f.el(y)}, {f.el(z), f.el(w)}) == 1) {
                            found = true;
                            break;
                        }
                CHECK(found);
            }
    }
    const GfField& f4 = GfField::of(2);
    CHECK_THROWS(sigma_field({f4.el(1), f4.el(1)}, {f8.el(1), f8.el(1)}));
}

TEST_CASE("symplectic basis on the canonical form") {
    for (int m = 1; m <= 3; ++m) {
        int dim = 2 * m;
        std::vector<uint32_t> gram(size_t(dim), 0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (canonical_sigma(Gf2Vec(1u << i, dim), Gf2Vec(1u << j, dim)))
                    gram[size_t(i)] |= (1u << j);
        auto basis = symplectic_basis(BilinearFormSpace::symplectic(dim, gram));
        // already canonical: standard basis reordered
        for (int i = 0; i < m; ++i) {
            CHECK(basis.a[size_t(i)] == (1u << i));
            CHECK(basis.b[size_t(i)] == (1u << (m + i)));
        }
    }
}

TEST_CASE("symplectic basis contract on a non-canonical form") {
    // gram J - I (all off-diagonal ones) is non-degenerate for even dim
    for (int dim : {2, 4, 6, 8}) {
        std::vector<uint32_t> gram(size_t(dim), 0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j) gram[size_t(i)] |= (1u << j);
        auto space = BilinearFormSpace::symplectic(dim, gram);
        auto basis = symplectic_basis(space);
        int m = dim / 2;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                CHECK(space.bform(basis.a[size_t(i)], basis.b[size_t(j)]) == (i == j ? 1 : 0));
                CHECK(space.bform(basis.a[size_t(i)], basis.a[size_t(j)]) == 0);
                CHECK(space.bform(basis.b[size_t(i)], basis.b[size_t(j)]) == 0);
            }
    }
}

TEST_CASE("symplectic basis rejects degenerate forms") {
    std::vector<uint32_t> gram = {0, 0};  // zero form on F_2^2
    CHECK_THROWS_AS(symplectic_basis(BilinearFormSpace::symplectic(2, gram)),
                    DegenerateFormError);
}

TEST_CASE("witt isometry") {
    auto hyp2 = BilinearFormSpace::quadratic(
        2, [](uint32_t v) { return int((v & 1) && (v >> 1)); });  // q(x,y) = xy
    auto L = witt_isometry(hyp2, hyp2);
    for (uint32_t v = 0; v < 4; ++v) CHECK(hyp2.q(L.apply(v)) == hyp2.q(v));

    // O- plane q = x^2 + xy + y^2 has no nonzero isotropic vector
    auto aniso2 = BilinearFormSpace::quadratic(2, [](uint32_t v) { return v == 0 ? 0 : 1; });
    auto La = witt_isometry(aniso2, aniso2);
    for (uint32_t v = 0; v < 4; ++v) CHECK(aniso2.q(La.apply(v)) == aniso2.q(v));

    CHECK_THROWS_AS(witt_isometry(hyp2, aniso2), InequivalentFormsError);

    // dim 4: hyperbolic + hyperbolic vs a permuted copy
    auto h4a = BilinearFormSpace::quadratic(2 * 2, [](uint32_t v) {
        return int(((v & 1) && ((v >> 1) & 1)) ^ (((v >> 2) & 1) && ((v >> 3) & 1)));
    });
    auto h4b = BilinearFormSpace::quadratic(2 * 2, [](uint32_t v) {
        return int(((v & 1) && ((v >> 2) & 1)) ^ (((v >> 1) & 1) && ((v >> 3) & 1)));
    });
    auto L4 = witt_isometry(h4a, h4b);
    for (uint32_t v = 0; v < 16; ++v) CHECK(h4b.q(L4.apply(v)) == h4a.q(v));
}

TEST_CASE("linear map inverse") {
    LinearMapGf2 m{3, 3, {0b011, 0b001, 0b111}};
    auto inv = m.inverse();
    for (uint32_t v = 0; v < 8; ++v) CHECK(inv.apply(m.apply(v)) == v);
    CHECK_THROWS(LinearMapGf2{2, 2, {0b01, 0b01}}.inverse());
}
