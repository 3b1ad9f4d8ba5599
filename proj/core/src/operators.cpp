#include "loccdisc/operators.hpp"

#include <stdexcept>

namespace loccdisc {

bool LocalOperator::isSymmetric() const {
    const std::size_t n = matrix.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (matrix[r].size() != n) return false;
        for (std::size_t c = r + 1; c < n; ++c)
            if (matrix[r][c] != matrix[c][r]) return false;
    }
    return true;
}

bool LocalOperator::isProjector() const {
    if (!isSymmetric()) return false;
    const std::size_t n = matrix.size();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Rat s = 0;
            for (std::size_t k = 0; k < n; ++k) s += matrix[r][k] * matrix[k][c];
            if (s != matrix[r][c]) return false;
        }
    return true;
}

namespace {

struct OpIndexing {
    std::vector<std::size_t> positions;  // register positions in the ket layout
    std::vector<int> dims;               // matching dims, op register order
    std::size_t dim = 1;

    long subIndex(const IndexTuple& t) const {
        long idx = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) idx = idx * dims[i] + t[positions[i]];
        return idx;
    }
    void writeSubIndex(long idx, IndexTuple& t) const {
        for (std::size_t i = positions.size(); i-- > 0;) {
            t[positions[i]] = static_cast<int>(idx % dims[i]);
            idx /= dims[i];
        }
    }
};

OpIndexing indexingFor(const LocalOperator& op, const SystemLayout& layout) {
    OpIndexing ix;
    for (const auto& rid : op.registers) {
        if (!layout.hasRegister(rid))
            throw std::invalid_argument("applyLocal: register '" + rid + "' not in layout");
        const auto pos = layout.position(rid);
        ix.positions.push_back(pos);
        ix.dims.push_back(layout.at(pos).dim);
        ix.dim *= static_cast<std::size_t>(layout.at(pos).dim);
    }
    if (op.matrix.size() != ix.dim)
        throw std::invalid_argument("applyLocal: operator '" + op.label + "' dimension mismatch");
    for (const auto& row : op.matrix)
        if (row.size() != ix.dim)
            throw std::invalid_argument("applyLocal: operator '" + op.label + "' matrix not square");
    return ix;
}

}  // namespace

Ket applyLocal(const LocalOperator& op, const Ket& x) {
    const OpIndexing ix = indexingFor(op, x.layout());
    Ket out(x.layout());
    for (const auto& [t, a] : x.amplitudes()) {
        const long col = ix.subIndex(t);
        IndexTuple t2 = t;
        for (std::size_t row = 0; row < ix.dim; ++row) {
            const Rat& m = op.matrix[row][col];
            if (m == 0) continue;
            ix.writeSubIndex(static_cast<long>(row), t2);
            out.addAmplitude(t2, m * a);
        }
    }
    return out;
}

LocalOperator zeroOperator(const SystemLayout& layout, const std::vector<std::string>& regs,
                           std::string label) {
    std::size_t dim = 1;
    std::string party;
    for (const auto& rid : regs) {
        const auto& r = layout.reg(rid);
        dim *= static_cast<std::size_t>(r.dim);
        party = r.party;
    }
    LocalOperator op;
    op.party = party;
    op.registers = regs;
    op.label = std::move(label);
    op.matrix.assign(dim, std::vector<Rat>(dim, rat(0)));
    return op;
}

LocalOperator identityOperator(const SystemLayout& layout, const std::vector<std::string>& regs,
                               std::string label) {
    LocalOperator op = zeroOperator(layout, regs, std::move(label));
    for (std::size_t i = 0; i < op.dim(); ++i) op.matrix[i][i] = rat(1);
    return op;
}

LocalOperator basisProjector(const SystemLayout& layout, const std::string& reg, int label,
                             std::string opLabel) {
    return rayProjector(layout, reg, ProductFactor::basis(label), std::move(opLabel));
}

LocalOperator rayProjector(const SystemLayout& layout, const std::string& reg,
                           const ProductFactor& ray, std::string opLabel) {
    const int dim = layout.reg(reg).dim;
    std::vector<Rat> v(dim, rat(0));
    Rat norm2 = 0;
    for (const auto& [label, c] : ray.terms) {
        if (label < 1 || label > dim)
            throw std::out_of_range("rayProjector: label out of range on '" + reg + "'");
        v[label - 1] += c;
    }
    for (const auto& a : v) norm2 += a * a;
    if (norm2 == 0) throw std::invalid_argument("rayProjector: zero ray");
    LocalOperator op = zeroOperator(layout, {reg}, std::move(opLabel));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (v[r] != 0 && v[c] != 0) op.matrix[r][c] = v[r] * v[c] / norm2;
    return op;
}

LocalOperator pairRayProjector(const SystemLayout& layout, const std::string& regX,
                               const std::string& regY, const ProductFactor& ray,
                               std::string opLabel) {
    const int dx = layout.reg(regX).dim;
    const int dy = layout.reg(regY).dim;
    std::vector<Rat> v(static_cast<std::size_t>(dx) * dy, rat(0));
    Rat norm2 = 0;
    for (const auto& [label, c] : ray.terms) {
        if (label < 1 || label > dx || label > dy)
            throw std::out_of_range("pairRayProjector: label out of range");
        v[static_cast<std::size_t>(label - 1) * dy + (label - 1)] += c;
    }
    for (const auto& a : v) norm2 += a * a;
    if (norm2 == 0) throw std::invalid_argument("pairRayProjector: zero ray");
    LocalOperator op = zeroOperator(layout, {regX, regY}, std::move(opLabel));
    const std::size_t n = v.size();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (v[r] != 0 && v[c] != 0) op.matrix[r][c] = v[r] * v[c] / norm2;
    return op;
}

LocalOperator ancillaGatedProjector(const SystemLayout& layout, const std::string& ancReg,
                                    const std::vector<int>& ancLabels, const std::string& prinReg,
                                    const ProductFactor& prinRay, std::string opLabel) {
    const int da = layout.reg(ancReg).dim;
    const LocalOperator prinProj = rayProjector(layout, prinReg, prinRay, "");
    const int dp = static_cast<int>(prinProj.dim());
    LocalOperator op = zeroOperator(layout, {ancReg, prinReg}, std::move(opLabel));
    for (int u : ancLabels) {
        if (u < 1 || u > da) throw std::out_of_range("ancillaGatedProjector: ancilla label out of range");
        for (int r = 0; r < dp; ++r)
            for (int c = 0; c < dp; ++c)
                op.matrix[(u - 1) * dp + r][(u - 1) * dp + c] += prinProj.matrix[r][c];
    }
    return op;
}

LocalOperator matchedPairProjector(const SystemLayout& layout, const std::string& regX,
                                   const std::string& regY, std::string opLabel) {
    const int dx = layout.reg(regX).dim;
    const int dy = layout.reg(regY).dim;
    if (dx != dy) throw std::invalid_argument("matchedPairProjector: register dims differ");
    LocalOperator op = zeroOperator(layout, {regX, regY}, std::move(opLabel));
    for (int i = 0; i < dx; ++i) op.matrix[i * dy + i][i * dy + i] = rat(1);
    return op;
}

std::pair<LocalOperator, LocalOperator> embedBasisChange(const SystemLayout& layout,
                                                         const std::string& registerId,
                                                         int alpha, int beta) {
    const int dim = layout.reg(registerId).dim;
    if (alpha == beta || alpha < 1 || beta < 1 || alpha > dim || beta > dim || alpha > beta)
        throw std::invalid_argument("embedBasisChange: require 1 <= alpha < beta <= dim");
    auto minus = rayProjector(layout, registerId, ProductFactor::minus(alpha, beta),
                              "|" + std::to_string(alpha) + "-" + std::to_string(beta) + "|");
    auto plus = rayProjector(layout, registerId, ProductFactor::plus(alpha, beta),
                             "|" + std::to_string(alpha) + "+" + std::to_string(beta) + "|");
    return {minus, plus};
}

RatMatrix matMul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    RatMatrix out(n, std::vector<Rat>(n, rat(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[r][k] == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (b[k][c] != 0) out[r][c] += a[r][k] * b[k][c];
        }
    return out;
}

bool matIsZero(const RatMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

RatMatrix matAdd(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out = a;
    for (std::size_t r = 0; r < out.size(); ++r)
        for (std::size_t c = 0; c < out[r].size(); ++c) out[r][c] += b[r][c];
    return out;
}

RatMatrix matIdentity(std::size_t n) {
    RatMatrix out(n, std::vector<Rat>(n, rat(0)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = rat(1);
    return out;
}

}  // namespace loccdisc
