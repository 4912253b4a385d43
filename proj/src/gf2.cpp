#include "zecap/gf2.hpp"

namespace zecap {

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Gf2Matrix Gf2Matrix::from01(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("Gf2Matrix: empty");
    Gf2Matrix m(int(rows.size()), int(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (int(rows[size_t(r)].size()) != m.cols)
            throw std::invalid_argument("Gf2Matrix: ragged rows");
        for (int c = 0; c < m.cols; ++c) {
            int v = rows[size_t(r)][size_t(c)];
            if (v != 0 && v != 1) throw std::invalid_argument("Gf2Matrix: entries must be 0/1");
            m.set(r, c, v);
        }
    }
    return m;
}

std::vector<std::vector<int>> Gf2Matrix::to01() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(rows), std::vector<int>(static_cast<size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out[size_t(r)][size_t(c)] = get(r, c);
    return out;
}

int gf2_rank(const Gf2Matrix& m) {
    std::vector<std::vector<uint64_t>> rows(static_cast<size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r)
        rows[size_t(r)].assign(m.data.begin() + long(r) * m.words_per_row,
                               m.data.begin() + long(r + 1) * m.words_per_row);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        size_t word = size_t(c >> 6);
        uint64_t bit = uint64_t(1) << (c & 63);
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (rows[size_t(r)][word] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[size_t(rank)], rows[size_t(pivot)]);
        for (int r = 0; r < m.rows; ++r) {
            if (r != rank && (rows[size_t(r)][word] & bit)) {
                for (int w = 0; w < m.words_per_row; ++w)
                    rows[size_t(r)][size_t(w)] ^= rows[size_t(rank)][size_t(w)];
            }
        }
        ++rank;
    }
    return rank;
}

nlohmann::json matrix_to_json(const Gf2Matrix& m) { return m.to01(); }

Gf2Matrix matrix_from_json(const nlohmann::json& j) {
    return Gf2Matrix::from01(j.get<std::vector<std::vector<int>>>());
}

nlohmann::json vec_to_json(const Gf2Vec& v) { return v.to01(); }

Gf2Vec vec_from_json(const nlohmann::json& j) { return Gf2Vec::from01(j.get<std::vector<int>>()); }

Gf2Matrix gf2_kron(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix m(a.rows * b.rows, a.cols * b.cols);
    for (int ra = 0; ra < a.rows; ++ra)
        for (int ca = 0; ca < a.cols; ++ca) {
            if (!a.get(ra, ca)) continue;
            for (int rb = 0; rb < b.rows; ++rb)
                for (int cb = 0; cb < b.cols; ++cb)
                    if (b.get(rb, cb)) m.set(ra * b.rows + rb, ca * b.cols + cb, 1);
        }
    return m;
}

}  // namespace zecap
