#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zecap {

inline int parity64(uint64_t x) { return __builtin_parityll(x); }
inline int popcount64(uint64_t x) { return __builtin_popcountll(x); }

// Vector over GF(2) with up to 32 coordinates. Coordinate i (0-based) is bit i,
// so e_1 of the 1-based conventions is the mask 1.
struct Gf2Vec {
    uint32_t bits = 0;
    int len = 0;

    Gf2Vec() = default;
    Gf2Vec(uint32_t b, int l) : bits(b), len(l) {
        if (l < 0 || l > 32) throw std::invalid_argument("Gf2Vec: length out of range");
        if (l < 32 && (b >> l) != 0) throw std::invalid_argument("Gf2Vec: bits exceed length");
    }

    int get(int i) const { return int((bits >> i) & 1u); }
    bool is_zero() const { return bits == 0; }
    int weight() const { return __builtin_popcount(bits); }

    Gf2Vec operator^(const Gf2Vec& o) const {
        if (len != o.len) throw std::invalid_argument("Gf2Vec: length mismatch");
        return Gf2Vec(bits ^ o.bits, len);
    }
    bool operator==(const Gf2Vec& o) const = default;

    // "0101..." with coordinate 1 first
    std::string str() const {
        std::string s(size_t(len), '0');
        for (int i = 0; i < len; ++i)
            if (get(i)) s[size_t(i)] = '1';
        return s;
    }
    std::vector<int> to01() const {
        std::vector<int> v(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) v[size_t(i)] = get(i);
        return v;
    }
    static Gf2Vec from01(const std::vector<int>& v) {
        Gf2Vec r(0, int(v.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] != 0 && v[i] != 1) throw std::invalid_argument("Gf2Vec: entries must be 0/1");
            if (v[i]) r.bits |= (1u << i);
        }
        return r;
    }
};

// Standard inner product mod 2.
inline int dot(const Gf2Vec& u, const Gf2Vec& v) {
    if (u.len != v.len) throw std::invalid_argument("dot: length mismatch");
    return __builtin_parity(u.bits & v.bits);
}

// Canonical symplectic form sigma(u,v) = sum_i u_i v_{m+i} + u_{m+i} v_i mod 2
// on vectors of even length 2m.
inline int canonical_sigma(const Gf2Vec& u, const Gf2Vec& v) {
    if (u.len != v.len) throw std::invalid_argument("canonical_sigma: length mismatch");
    if (u.len % 2 != 0 || u.len == 0) throw std::invalid_argument("canonical_sigma: length must be even and positive");
    int m = u.len / 2;
    uint32_t lomask = (m == 32) ? ~0u : ((1u << m) - 1u);
    uint32_t ulo = u.bits & lomask, uhi = u.bits >> m;
    uint32_t vlo = v.bits & lomask, vhi = v.bits >> m;
    return __builtin_parity(ulo & vhi) ^ __builtin_parity(uhi & vlo);
}

// Mask-level sigma for hot loops (caller guarantees sane masks).
inline int sigma_mask(uint32_t u, uint32_t v, int m) {
    uint32_t lomask = (1u << m) - 1u;
    return __builtin_parity((u & lomask) & (v >> m)) ^ __builtin_parity((u >> m) & (v & lomask));
}

// Dynamic bitset, used for adjacency rows and search candidate sets.
struct Bitset {
    int n = 0;
    std::vector<uint64_t> w;

    Bitset() = default;
    explicit Bitset(int n_) : n(n_), w(size_t((n_ + 63) / 64), 0) {}

    void set(int i) { w[size_t(i >> 6)] |= (uint64_t(1) << (i & 63)); }
    void reset(int i) { w[size_t(i >> 6)] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[size_t(i >> 6)] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w) c += popcount64(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    int first() const {  // -1 if empty
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return int(i * 64) + __builtin_ctzll(w[i]);
        return -1;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bitset& andnot(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    Bitset intersect(const Bitset& o) const {
        Bitset r = *this;
        r &= o;
        return r;
    }
    bool operator==(const Bitset& o) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t x = w[i];
            while (x) {
                f(int(i * 64) + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
};

}  // namespace zecap
