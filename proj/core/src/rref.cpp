#include "loccdisc/rref.hpp"

#include <stdexcept>

namespace loccdisc {

std::size_t rref(RatMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const Rat inv = 1 / m[rank][col];
        for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t matrixRank(RatMatrix m) { return rref(m); }

std::vector<std::vector<Rat>> nullspaceBasis(RatMatrix m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("nullspaceBasis: ragged matrix");
    const std::size_t rank = rref(m);

    // leading column of each nonzero row is a pivot column
    std::vector<long> pivotRowOfCol(cols, -1);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m[r][c] != 0) {
                pivotRowOfCol[c] = static_cast<long>(r);
                break;
            }

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivotRowOfCol[free] >= 0) continue;
        std::vector<Rat> v(cols, rat(0));
        v[free] = rat(1);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivotRowOfCol[c] >= 0) v[c] = -m[static_cast<std::size_t>(pivotRowOfCol[c])][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace loccdisc
