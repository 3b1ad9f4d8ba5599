#include "loccdisc/schmidt.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "loccdisc/rref.hpp"

namespace loccdisc {

SchmidtInfo schmidtRankAcross(const Ket& x, const std::vector<std::string>& groupA,
                              const std::vector<std::string>& groupB) {
    if (x.isZero()) throw std::invalid_argument("schmidtRankAcross: zero ket");

    const auto& layout = x.layout();
    std::vector<std::size_t> posA, posB;
    for (const auto& id : groupA) posA.push_back(layout.position(id));
    for (const auto& id : groupB) posB.push_back(layout.position(id));
    std::vector<bool> covered(layout.size(), false);
    for (auto p : posA) covered[p] = true;
    for (auto p : posB) {
        if (covered[p])
            throw std::invalid_argument("schmidtRankAcross: register in both groups");
        covered[p] = true;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw std::invalid_argument("schmidtRankAcross: partition does not cover the layout");

    auto subTuple = [](const IndexTuple& t, const std::vector<std::size_t>& pos) {
        IndexTuple s(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) s[i] = t[pos[i]];
        return s;
    };

    // index the nonzero rows/cols of the reshaped amplitude matrix
    std::map<IndexTuple, std::size_t> rowIdx, colIdx;
    for (const auto& [t, a] : x.amplitudes()) {
        rowIdx.emplace(subTuple(t, posA), rowIdx.size());
        colIdx.emplace(subTuple(t, posB), colIdx.size());
    }
    RatMatrix m(rowIdx.size(), std::vector<Rat>(colIdx.size(), rat(0)));
    for (const auto& [t, a] : x.amplitudes())
        m[rowIdx.at(subTuple(t, posA))][colIdx.at(subTuple(t, posB))] = a;

    SchmidtInfo info;
    // gram of the rows: balanced iff M M^T = c I over the occupied rows AND
    // no row vanished (rank equals occupied row count)
    const std::size_t r = m.size();
    Rat c = 0;
    bool balanced = true;
    for (std::size_t i = 0; i < r && balanced; ++i)
        for (std::size_t j = i; j < r && balanced; ++j) {
            Rat g = 0;
            for (std::size_t k = 0; k < m[i].size(); ++k) g += m[i][k] * m[j][k];
            if (i == j) {
                if (c == 0)
                    c = g;
                else if (g != c)
                    balanced = false;
            } else if (g != 0) {
                balanced = false;
            }
        }

    info.rank = matrixRank(std::move(m));
    info.balanced = balanced && c != 0 && info.rank == r;
    info.scale = info.balanced ? c : rat(0);
    return info;
}

}  // namespace loccdisc
