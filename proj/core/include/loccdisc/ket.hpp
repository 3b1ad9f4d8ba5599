#pragma once

#include <map>
#include <utility>
#include <vector>

#include "loccdisc/layout.hpp"
#include "loccdisc/rational.hpp"

namespace loccdisc {

// One basis index per register, 0-based.
using IndexTuple = std::vector<int>;

// A single-register superposition with integer-ish coefficients, written with
// 1-based basis labels: {(1,+1),(4,-1)} is |1-4>. Building block for the
// product-state families and the tile renderer.
struct ProductFactor {
    std::vector<std::pair<int, Rat>> terms;  // (1-based label, coefficient)

    static ProductFactor basis(int label);
    static ProductFactor minus(int a, int b);   // |a> - |b>
    static ProductFactor plus(int a, int b);    // |a> + |b>
    static ProductFactor allOnes(int dim);      // |1> + ... + |dim>
    bool isSingleBasis() const { return terms.size() == 1; }
};

// Sparse exact ket over a layout's product basis. Stored unnormalized; absent
// tuples mean amplitude 0 and stored amplitudes are always nonzero.
class Ket {
public:
    Ket() = default;
    explicit Ket(SystemLayout layout) : layout_(std::move(layout)) {}

    const SystemLayout& layout() const { return layout_; }
    const std::map<IndexTuple, Rat>& amplitudes() const { return amps_; }

    bool isZero() const { return amps_.empty(); }
    std::size_t support() const { return amps_.size(); }

    Rat amplitude(const IndexTuple& t) const;
    void setAmplitude(const IndexTuple& t, const Rat& a);  // erases on zero
    void addAmplitude(const IndexTuple& t, const Rat& a);

    Rat normSquared() const;

    Ket& scale(const Rat& c);
    Ket operator+(const Ket& o) const;
    Ket operator-(const Ket& o) const;

    // |label1,...,labelR> with 1-based labels, amplitude 1.
    static Ket basisState(const SystemLayout& layout, const std::vector<int>& labels);
    // Product of per-register factors, one per register in layout order.
    static Ket productState(const SystemLayout& layout, const std::vector<ProductFactor>& factors);

private:
    void checkTuple(const IndexTuple& t) const;
    SystemLayout layout_;
    std::map<IndexTuple, Rat> amps_;
};

// Tensor product on concatenated layouts; register ids must not collide.
Ket tensor(const std::vector<Ket>& factors);
Ket tensor(const Ket& a, const Ket& b);

// Exact inner product, symmetric (all amplitudes are real rationals).
Rat inner(const Ket& x, const Ket& y);

}  // namespace loccdisc
