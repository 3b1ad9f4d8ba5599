#include "loccdisc/tiles.hpp"

#include <algorithm>
#include <sstream>

#include "loccdisc/families.hpp"

namespace loccdisc {

namespace {

std::string factorText(const ProductFactor& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& [label, c] = f.terms[i];
        if (i > 0) os << (c < 0 ? "-" : "+");
        os << label;
    }
    return os.str();
}

std::string renderGrid(const std::vector<BipartiteStateSpec>& specs, int m, int n) {
    // cell (row a, col b) -> state numbers with support there, stopper omitted
    std::vector<std::vector<std::vector<int>>> cells(m, std::vector<std::vector<int>>(n));
    int tiles = 0;
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const auto& sp = specs[k];
        if (sp.kind == BipKind::Stopper) continue;
        ++tiles;
        for (const auto& [ra, ca] : sp.a.terms)
            for (const auto& [rb, cb] : sp.b.terms) cells[ra - 1][rb - 1].push_back(static_cast<int>(k) + 1);
    }

    std::vector<std::vector<std::string>> text(m, std::vector<std::string>(n));
    std::size_t width = 3;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            std::ostringstream os;
            for (std::size_t i = 0; i < cells[r][c].size(); ++i)
                os << (i ? "," : "") << cells[r][c][i];
            text[r][c] = cells[r][c].empty() ? "." : os.str();
            width = std::max(width, text[r][c].size());
        }

    std::ostringstream out;
    out << tiles << " tiles on a " << m << "x" << n << " grid (stopper omitted)\n";
    out << "    ";
    for (int c = 1; c <= n; ++c) {
        std::string h = "B" + std::to_string(c);
        out << " " << h << std::string(width - h.size() + 1, ' ');
    }
    out << "\n";
    for (int r = 0; r < m; ++r) {
        out << "A" << r + 1 << " |";
        for (int c = 0; c < n; ++c)
            out << " " << text[r][c] << std::string(width - text[r][c].size(), ' ') << "|";
        out << "\n";
    }
    out << "\n";
    for (const auto& sp : specs) {
        if (sp.kind == BipKind::Stopper) continue;
        out << sp.label << ": A[" << factorText(sp.a) << "] B[" << factorText(sp.b) << "]\n";
    }
    return out.str();
}

}  // namespace

std::string renderBipartiteTiles(int m, int n) {
    return renderGrid(bipartiteEq1Specs(m, n), m, n);
}

std::string renderEvenTiles(const std::vector<int>& dims) {
    std::ostringstream out;
    for (std::size_t s = 0; 2 * s + 1 < dims.size(); ++s) {
        out << "block " << s + 1 << " (" << dims[2 * s] << "x" << dims[2 * s + 1] << ")\n";
        out << renderGrid(bipartiteEq1Specs(dims[2 * s], dims[2 * s + 1]), dims[2 * s],
                          dims[2 * s + 1]);
        if (2 * s + 3 < dims.size()) out << "\n";
    }
    return out.str();
}

}  // namespace loccdisc
