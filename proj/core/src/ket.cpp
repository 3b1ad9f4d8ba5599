#include "loccdisc/ket.hpp"

#include <stdexcept>

namespace loccdisc {

ProductFactor ProductFactor::basis(int label) { return {{{label, rat(1)}}}; }
ProductFactor ProductFactor::minus(int a, int b) { return {{{a, rat(1)}, {b, rat(-1)}}}; }
ProductFactor ProductFactor::plus(int a, int b) { return {{{a, rat(1)}, {b, rat(1)}}}; }

ProductFactor ProductFactor::allOnes(int dim) {
    ProductFactor f;
    for (int l = 1; l <= dim; ++l) f.terms.emplace_back(l, rat(1));
    return f;
}

void Ket::checkTuple(const IndexTuple& t) const {
    if (t.size() != layout_.size())
        throw std::invalid_argument("ket: tuple length does not match layout");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0 || t[i] >= layout_.at(i).dim)
            throw std::out_of_range("ket: index out of range for register '" + layout_.at(i).id + "'");
}

Rat Ket::amplitude(const IndexTuple& t) const {
    auto it = amps_.find(t);
    return it == amps_.end() ? rat(0) : it->second;
}

void Ket::setAmplitude(const IndexTuple& t, const Rat& a) {
    checkTuple(t);
    if (a == 0)
        amps_.erase(t);
    else
        amps_[t] = a;
}

void Ket::addAmplitude(const IndexTuple& t, const Rat& a) {
    checkTuple(t);
    auto it = amps_.find(t);
    if (it == amps_.end()) {
        if (a != 0) amps_.emplace(t, a);
        return;
    }
    it->second += a;
    if (it->second == 0) amps_.erase(it);
}

Rat Ket::normSquared() const {
    Rat s = 0;
    for (const auto& [t, a] : amps_) s += a * a;
    return s;
}

Ket& Ket::scale(const Rat& c) {
    if (c == 0) {
        amps_.clear();
        return *this;
    }
    for (auto& [t, a] : amps_) a *= c;
    return *this;
}

Ket Ket::operator+(const Ket& o) const {
    if (!(layout_ == o.layout_)) throw std::invalid_argument("ket add: layout mismatch");
    Ket out = *this;
    for (const auto& [t, a] : o.amps_) out.addAmplitude(t, a);
    return out;
}

Ket Ket::operator-(const Ket& o) const {
    if (!(layout_ == o.layout_)) throw std::invalid_argument("ket sub: layout mismatch");
    Ket out = *this;
    for (const auto& [t, a] : o.amps_) out.addAmplitude(t, -a);
    return out;
}

Ket Ket::basisState(const SystemLayout& layout, const std::vector<int>& labels) {
    if (labels.size() != layout.size())
        throw std::invalid_argument("basisState: one label per register required");
    IndexTuple t(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) t[i] = labels[i] - 1;
    Ket k(layout);
    k.setAmplitude(t, rat(1));
    return k;
}

Ket Ket::productState(const SystemLayout& layout, const std::vector<ProductFactor>& factors) {
    if (factors.size() != layout.size())
        throw std::invalid_argument("productState: one factor per register required");
    std::vector<std::pair<IndexTuple, Rat>> partial{{IndexTuple{}, rat(1)}};
    for (const auto& factor : factors) {
        std::vector<std::pair<IndexTuple, Rat>> next;
        next.reserve(partial.size() * factor.terms.size());
        for (const auto& [t, c] : partial)
            for (const auto& [label, w] : factor.terms) {
                IndexTuple t2 = t;
                t2.push_back(label - 1);
                next.emplace_back(std::move(t2), c * w);
            }
        partial = std::move(next);
    }
    Ket k(layout);
    for (auto& [t, c] : partial) k.addAmplitude(t, c);
    return k;
}

Ket tensor(const Ket& a, const Ket& b) { return tensor(std::vector<Ket>{a, b}); }

Ket tensor(const std::vector<Ket>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor: no factors");
    SystemLayout layout = factors[0].layout();
    for (std::size_t i = 1; i < factors.size(); ++i) layout = layout.concat(factors[i].layout());

    Ket out(layout);
    // iterative cross product over the factor amplitude maps
    std::vector<std::map<IndexTuple, Rat>::const_iterator> its, ends;
    for (const auto& f : factors) {
        if (f.isZero()) return out;
        its.push_back(f.amplitudes().begin());
        ends.push_back(f.amplitudes().end());
    }
    while (true) {
        IndexTuple t;
        Rat c = 1;
        for (std::size_t i = 0; i < its.size(); ++i) {
            t.insert(t.end(), its[i]->first.begin(), its[i]->first.end());
            c *= its[i]->second;
        }
        out.setAmplitude(t, c);
        std::size_t i = its.size();
        while (i > 0) {
            --i;
            if (++its[i] != ends[i]) break;
            its[i] = factors[i].amplitudes().begin();
            if (i == 0) return out;
        }
    }
}

Rat inner(const Ket& x, const Ket& y) {
    if (!(x.layout() == y.layout())) throw std::invalid_argument("inner: layout mismatch");
    const auto& small = x.support() <= y.support() ? x : y;
    const auto& large = x.support() <= y.support() ? y : x;
    Rat s = 0;
    for (const auto& [t, a] : small.amplitudes()) {
        auto it = large.amplitudes().find(t);
        if (it != large.amplitudes().end()) s += a * it->second;
    }
    return s;
}

}  // namespace loccdisc
