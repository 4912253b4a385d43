#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zecap/bits.hpp"

namespace zecap {

// Dense matrix over GF(2), rows packed into 64-bit words.
struct Gf2Matrix {
    int rows = 0, cols = 0;
    int words_per_row = 0;
    std::vector<uint64_t> data;  // row-major blocks

    Gf2Matrix() = default;
    Gf2Matrix(int r, int c)
        : rows(r), cols(c), words_per_row((c + 63) / 64), data(size_t(r) * size_t((c + 63) / 64), 0) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("Gf2Matrix: dimensions must be positive");
    }

    int get(int r, int c) const {
        return int((data[size_t(r) * words_per_row + size_t(c >> 6)] >> (c & 63)) & 1);
    }
    void set(int r, int c, int v) {
        uint64_t& wrd = data[size_t(r) * words_per_row + size_t(c >> 6)];
        wrd = (wrd & ~(uint64_t(1) << (c & 63))) | (uint64_t(v & 1) << (c & 63));
    }

    static Gf2Matrix identity(int n);
    static Gf2Matrix from01(const std::vector<std::vector<int>>& m);
    std::vector<std::vector<int>> to01() const;
    bool operator==(const Gf2Matrix&) const = default;
};

// Rank over GF(2) by exact elimination.
int gf2_rank(const Gf2Matrix& m);

// Kronecker product over GF(2).
Gf2Matrix gf2_kron(const Gf2Matrix& a, const Gf2Matrix& b);

// JSON interchange: matrices as arrays of 0/1 rows, vectors as 0/1 arrays.
nlohmann::json matrix_to_json(const Gf2Matrix& m);
Gf2Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const Gf2Vec& v);
Gf2Vec vec_from_json(const nlohmann::json& j);

}  // namespace zecap
