#include "loccdisc/families.hpp"

#include <numeric>
#include <stdexcept>

namespace loccdisc {

namespace {

std::string phi(int k) { return "phi" + std::to_string(k); }

void requireBipDims(int m, int n) {
    if (!(4 <= m && m <= n))
        throw std::invalid_argument("bipartite family requires 4 <= m <= n");
}

void requireTriDims(int n1, int n2, int n3) {
    if (!(4 <= n1 && n1 <= n2 && n2 <= n3))
        throw std::invalid_argument("tripartite family requires 4 <= n1 <= n2 <= n3");
}

}  // namespace

std::vector<BipartiteStateSpec> bipartiteEq1Specs(int m, int n) {
    requireBipDims(m, n);
    std::vector<BipartiteStateSpec> out;
    auto push = [&](BipKind kind, int index, ProductFactor a, ProductFactor b) {
        out.push_back({phi(static_cast<int>(out.size()) + 1), kind, index, std::move(a), std::move(b)});
    };

    push(BipKind::Stopper, 0, ProductFactor::allOnes(m), ProductFactor::allOnes(n));
    for (int i = 2; i <= m; ++i)
        push(BipKind::IPair, i, ProductFactor::basis(i), ProductFactor::minus(1, i));
    push(BipKind::MPlusOne, 2, ProductFactor::minus(1, m), ProductFactor::basis(2));
    for (int j = 3; j <= m; ++j)
        push(BipKind::JState, j, ProductFactor::minus(1, j - 1), ProductFactor::basis(j));
    for (int l = m + 1; l <= n; ++l)
        push(BipKind::LState, l, ProductFactor::minus(1, 2), ProductFactor::basis(l));
    if (m + 1 <= n)
        push(BipKind::MN, 0, ProductFactor::basis(m), ProductFactor::minus(3, m + 1));
    for (int k = 1; k <= (n - m) / 2; ++k) {
        const int s = m + 2 * k - 1;
        const int t = m + 2 * k;
        if (s + 1 <= n)
            push(BipKind::SState, s, ProductFactor::basis(m - 1), ProductFactor::minus(s, s + 1));
        if (t + 1 <= n)
            push(BipKind::TState, t, ProductFactor::basis(m), ProductFactor::minus(t, t + 1));
    }

    if (static_cast<int>(out.size()) != 2 * n - 1)
        throw FamilyConsistencyError("bipartite(" + std::to_string(m) + "," + std::to_string(n) +
                                     "): generated " + std::to_string(out.size()) +
                                     " states, formula says " + std::to_string(2 * n - 1));
    return out;
}

SystemLayout bipartiteLayout(int m, int n) {
    return SystemLayout({{"A", "Alice", m, RegisterRole::Principal},
                         {"B", "Bob", n, RegisterRole::Principal}});
}

StateSet buildBipartiteEq1(int m, int n) {
    const auto specs = bipartiteEq1Specs(m, n);
    StateSet set;
    set.family = (m == 4 && n == 5) ? Family::ExampleEq3 : Family::BipartiteEq1;
    set.params = {m, n};
    set.layout = bipartiteLayout(m, n);
    set.claimedCount = 2L * n - 1;
    set.stopperLabel = specs.front().label;
    for (const auto& sp : specs)
        set.states.push_back({sp.label, Ket::productState(set.layout, {sp.a, sp.b}), {sp.a, sp.b}});
    set.checkLabelsAndOrthogonality();
    return set;
}

TriCase triCaseFor(int n2, int n3) {
    if (n2 == n3) return TriCase::C;
    return ((n3 - n2) % 2 == 1) ? TriCase::A : TriCase::B;
}

RelabelMap relabelMapFor(TriCase c, int n2) {
    RelabelMap map;
    map.caseKind = c;
    map.mapping.resize(n2);
    std::iota(map.mapping.begin(), map.mapping.end(), 1);
    if (c == TriCase::B) std::swap(map.mapping[n2 - 2], map.mapping[n2 - 1]);
    if (c == TriCase::C) std::swap(map.mapping[1], map.mapping[n2 - 2]);
    return map;
}

std::vector<TripartiteStateSpec> tripartiteGSpecs(int n1, int n2, int n3,
                                                  std::optional<TriCase> caseOverride) {
    requireTriDims(n1, n2, n3);
    const TriCase cs = caseOverride.value_or(triCaseFor(n2, n3));
    const RelabelMap prime = relabelMapFor(cs, n2);

    // The V-state column alternates between n2 and n2-1 (before relabeling):
    // the canonical 17-state family pins n1-i odd to n2-1 and n1-i even to n2.
    auto vColumn = [&](int i) {
        const int deltaEff = ((n1 - i) % 2 != 0) ? 1 : 0;
        return prime(n2 - deltaEff);
    };

    const ProductFactor hRay = [&] {
        const int a = prime(1), b = prime(2);
        return a < b ? ProductFactor::minus(a, b) : ProductFactor::minus(b, a);
    }();

    const auto bip = bipartiteEq1Specs(n2, n3);
    // The overlap between H(n1) and the T block: the bipartite state whose
    // factors are |1'-2'> on the n2 side and |n3> on the n3 side.
    auto isOverlap = [&](const BipartiteStateSpec& sp) {
        if (sp.b.terms.size() != 1 || sp.b.terms[0].first != n3) return false;
        if (sp.a.terms.size() != 2) return false;
        return sp.a.terms[0].first == hRay.terms[0].first &&
               sp.a.terms[1].first == hRay.terms[1].first;
    };

    std::vector<TripartiteStateSpec> out;
    auto push = [&](TriKind kind, int index, ProductFactor c, ProductFactor b, ProductFactor a,
                    const BipartiteStateSpec* bipSpec) {
        TripartiteStateSpec sp;
        sp.label = phi(static_cast<int>(out.size()) + 1);
        sp.kind = kind;
        sp.index = index;
        sp.c = std::move(c);
        sp.b = std::move(b);
        sp.a = std::move(a);
        if (bipSpec) {
            sp.bip = *bipSpec;
            sp.hasBip = true;
        }
        out.push_back(std::move(sp));
    };

    push(TriKind::Stopper, 0, ProductFactor::allOnes(n1), ProductFactor::allOnes(n2),
         ProductFactor::allOnes(n3), nullptr);

    const BipartiteStateSpec* overlap = nullptr;
    for (const auto& sp : bip) {
        if (sp.kind == BipKind::Stopper) continue;
        if (isOverlap(sp)) {
            overlap = &sp;
            continue;
        }
        push(TriKind::T, 0, ProductFactor::basis(n1), sp.a, sp.b, &sp);
    }
    if (overlap == nullptr)
        throw FamilyConsistencyError("tripartite G: no H/T overlap state found");
    push(TriKind::H, n1, ProductFactor::basis(n1), overlap->a, overlap->b, overlap);
    for (int i = n1 - 1; i >= 1; --i)
        push(TriKind::H, i, ProductFactor::basis(i), hRay, ProductFactor::basis(n3), nullptr);
    for (int i = 1; i <= n1 - 1; ++i)
        push(TriKind::V, i, ProductFactor::minus(i, i + 1), ProductFactor::basis(vColumn(i)),
             ProductFactor::basis(n3), nullptr);

    if (static_cast<int>(out.size()) != 2 * (n1 + n3) - 3)
        throw FamilyConsistencyError("tripartite G(" + std::to_string(n1) + "," +
                                     std::to_string(n2) + "," + std::to_string(n3) +
                                     "): generated " + std::to_string(out.size()) +
                                     " states, formula says " + std::to_string(2 * (n1 + n3) - 3));
    return out;
}

SystemLayout tripartiteLayout(int n1, int n2, int n3) {
    return SystemLayout({{"C", "Charles", n1, RegisterRole::Principal},
                         {"B", "Bob", n2, RegisterRole::Principal},
                         {"A", "Alice", n3, RegisterRole::Principal}});
}

StateSet buildTripartiteG(int n1, int n2, int n3, std::optional<TriCase> caseOverride) {
    const auto specs = tripartiteGSpecs(n1, n2, n3, caseOverride);
    StateSet set;
    set.family = Family::TripartiteG;
    set.params = {n1, n2, n3};
    set.layout = tripartiteLayout(n1, n2, n3);
    set.claimedCount = 2L * (n1 + n3) - 3;
    set.stopperLabel = specs.front().label;
    for (const auto& sp : specs)
        set.states.push_back(
            {sp.label, Ket::productState(set.layout, {sp.c, sp.b, sp.a}), {sp.c, sp.b, sp.a}});
    set.checkLabelsAndOrthogonality();
    return set;
}

StateSet buildTripartiteEq6() {
    using F = ProductFactor;
    StateSet set;
    set.family = Family::TripartiteEq6;
    set.params = {4, 5, 6};
    set.layout = tripartiteLayout(4, 5, 6);
    set.claimedCount = 17;
    set.stopperLabel = "phi1";

    // the 17 states on C(4) x B(5) x A(6)
    const std::vector<std::vector<F>> factors = {
        {F::allOnes(4), F::allOnes(5), F::allOnes(6)},    // phi1
        {F::basis(4), F::basis(2), F::minus(1, 2)},       // phi2
        {F::basis(4), F::basis(3), F::minus(1, 3)},       // phi3
        {F::basis(4), F::basis(4), F::minus(1, 4)},       // phi4
        {F::basis(4), F::basis(5), F::minus(1, 5)},       // phi5
        {F::basis(4), F::minus(1, 5), F::basis(2)},       // phi6
        {F::basis(4), F::minus(1, 2), F::basis(3)},       // phi7
        {F::basis(4), F::minus(1, 3), F::basis(4)},       // phi8
        {F::basis(4), F::minus(1, 4), F::basis(5)},       // phi9
        {F::basis(4), F::basis(5), F::minus(3, 6)},       // phi10
        {F::basis(4), F::minus(1, 2), F::basis(6)},       // phi11
        {F::basis(3), F::minus(1, 2), F::basis(6)},       // phi12
        {F::basis(2), F::minus(1, 2), F::basis(6)},       // phi13
        {F::basis(1), F::minus(1, 2), F::basis(6)},       // phi14
        {F::minus(1, 2), F::basis(4), F::basis(6)},       // phi15
        {F::minus(2, 3), F::basis(5), F::basis(6)},       // phi16
        {F::minus(3, 4), F::basis(4), F::basis(6)},       // phi17
    };
    for (std::size_t k = 0; k < factors.size(); ++k)
        set.states.push_back({phi(static_cast<int>(k) + 1),
                              Ket::productState(set.layout, factors[k]), factors[k]});
    set.checkLabelsAndOrthogonality();
    return set;
}

Ket buildMES(int d) {
    if (d < 2) throw std::invalid_argument("buildMES: dimension must be >= 2");
    SystemLayout layout({{"a", "Alice", d, RegisterRole::Ancilla},
                         {"b", "Bob", d, RegisterRole::Ancilla}});
    Ket k(layout);
    for (int i = 0; i < d; ++i) k.setAmplitude({i, i}, rat(1));
    return k;
}

std::string compositeStopperLabel() { return "stopper"; }

std::string compositeLabel(int block, const std::string& blockStateLabel) {
    return "blk" + std::to_string(block) + ":" + blockStateLabel;
}

namespace {

// Ordering is required within each block only; the blocks are independent
// bipartite (or tripartite) systems.
void requireEvenDims(const std::vector<int>& dims) {
    if (dims.size() < 4 || dims.size() % 2 != 0)
        throw std::invalid_argument("even family requires 2k dims with k >= 2");
    for (std::size_t s = 0; 2 * s < dims.size(); ++s)
        if (!(4 <= dims[2 * s] && dims[2 * s] <= dims[2 * s + 1]))
            throw std::invalid_argument("even family block " + std::to_string(s + 1) +
                                        " requires 4 <= m <= n");
}

void requireOddDims(const std::vector<int>& dims) {
    if (dims.size() < 5 || dims.size() % 2 == 0)
        throw std::invalid_argument("odd family requires 2k+1 dims with k >= 2");
    if (!(4 <= dims[0] && dims[0] <= dims[1] && dims[1] <= dims[2]))
        throw std::invalid_argument("odd family block 1 requires 4 <= n1 <= n2 <= n3");
    for (std::size_t s = 2; 2 * s < dims.size() + 1; ++s)
        if (!(4 <= dims[2 * s - 1] && dims[2 * s - 1] <= dims[2 * s]))
            throw std::invalid_argument("odd family block " + std::to_string(s) +
                                        " requires 4 <= m <= n");
}

}  // namespace

SystemLayout evenLayout(const std::vector<int>& dims) {
    requireEvenDims(dims);
    std::vector<Register> regs;
    for (std::size_t s = 0; 2 * s < dims.size(); ++s) {
        const std::string k = std::to_string(s + 1);
        regs.push_back({"A" + k, "Alice" + k, dims[2 * s], RegisterRole::Principal});
        regs.push_back({"B" + k, "Bob" + k, dims[2 * s + 1], RegisterRole::Principal});
    }
    return SystemLayout(std::move(regs));
}

StateSet buildEvenS(const std::vector<int>& dims) {
    requireEvenDims(dims);
    const std::size_t k = dims.size() / 2;

    StateSet set;
    set.family = Family::EvenS;
    set.params = dims;
    set.layout = evenLayout(dims);
    long formula = 0;
    for (std::size_t s = 0; s < k; ++s) formula += dims[2 * s + 1];
    set.claimedCount = 2 * (formula - static_cast<long>(k)) + 1;
    set.stopperLabel = compositeStopperLabel();

    std::vector<ProductFactor> stopper;
    for (int d : dims) stopper.push_back(ProductFactor::allOnes(d));
    set.states.push_back(
        {set.stopperLabel, Ket::productState(set.layout, stopper), stopper});

    for (std::size_t s = 0; s < k; ++s) {
        const auto specs = bipartiteEq1Specs(dims[2 * s], dims[2 * s + 1]);
        for (const auto& sp : specs) {
            if (sp.kind == BipKind::Stopper) continue;
            std::vector<ProductFactor> factors;
            for (std::size_t r = 0; r < k; ++r) {
                if (r == s) {
                    factors.push_back(sp.a);
                    factors.push_back(sp.b);
                } else {
                    factors.push_back(ProductFactor::basis(1));
                    factors.push_back(ProductFactor::basis(1));
                }
            }
            set.states.push_back({compositeLabel(static_cast<int>(s) + 1, sp.label),
                                  Ket::productState(set.layout, factors), factors});
        }
    }

    if (set.actualCount() != set.claimedCount)
        throw FamilyConsistencyError("even family: generated " + std::to_string(set.actualCount()) +
                                     " states, formula says " + std::to_string(set.claimedCount));
    set.checkLabelsAndOrthogonality();
    return set;
}

SystemLayout oddLayout(const std::vector<int>& dims) {
    requireOddDims(dims);
    std::vector<Register> regs;
    regs.push_back({"C1", "Charles1", dims[0], RegisterRole::Principal});
    regs.push_back({"B1", "Bob1", dims[1], RegisterRole::Principal});
    regs.push_back({"A1", "Alice1", dims[2], RegisterRole::Principal});
    for (std::size_t s = 2; 2 * s < dims.size() + 1; ++s) {
        const std::string k = std::to_string(s);
        regs.push_back({"A" + k, "Alice" + k, dims[2 * s - 1], RegisterRole::Principal});
        regs.push_back({"B" + k, "Bob" + k, dims[2 * s], RegisterRole::Principal});
    }
    return SystemLayout(std::move(regs));
}

long oddClaimedCount(const std::vector<int>& dims) {
    requireOddDims(dims);
    long sum = 0;
    for (std::size_t i = 0; i < dims.size(); i += 2) sum += dims[i];
    const long k = static_cast<long>(dims.size() / 2);
    return 2 * (sum - k) + 1;
}

long oddEnumeratedCount(const std::vector<int>& dims) {
    requireOddDims(dims);
    long count = 1 + (2L * (dims[0] + dims[2]) - 4);
    for (std::size_t s = 4; s < dims.size(); s += 2) count += 2L * dims[s] - 2;
    return count;
}

StateSet buildOddSprime(const std::vector<int>& dims) {
    requireOddDims(dims);
    const std::size_t k = (dims.size() - 1) / 2;

    StateSet set;
    set.family = Family::OddSprime;
    set.params = dims;
    set.layout = oddLayout(dims);
    set.claimedCount = oddClaimedCount(dims);
    set.stopperLabel = compositeStopperLabel();

    std::vector<ProductFactor> stopper;
    for (int d : dims) stopper.push_back(ProductFactor::allOnes(d));
    set.states.push_back(
        {set.stopperLabel, Ket::productState(set.layout, stopper), stopper});

    auto withFills = [&](std::size_t activeBlock, std::vector<ProductFactor> active) {
        std::vector<ProductFactor> factors;
        if (activeBlock == 1) {
            factors = std::move(active);
        } else {
            factors.push_back(ProductFactor::basis(1));
            factors.push_back(ProductFactor::basis(1));
            factors.push_back(ProductFactor::basis(1));
        }
        for (std::size_t s = 2; s <= k; ++s) {
            if (s == activeBlock) {
                factors.push_back(active[0]);
                factors.push_back(active[1]);
            } else {
                factors.push_back(ProductFactor::basis(1));
                factors.push_back(ProductFactor::basis(1));
            }
        }
        return factors;
    };

    for (const auto& sp : tripartiteGSpecs(dims[0], dims[1], dims[2])) {
        if (sp.kind == TriKind::Stopper) continue;
        auto factors = withFills(1, {sp.c, sp.b, sp.a});
        set.states.push_back({compositeLabel(1, sp.label),
                              Ket::productState(set.layout, factors), factors});
    }
    for (std::size_t s = 2; s <= k; ++s) {
        for (const auto& sp : bipartiteEq1Specs(dims[2 * s - 1], dims[2 * s])) {
            if (sp.kind == BipKind::Stopper) continue;
            auto factors = withFills(s, {sp.a, sp.b});
            set.states.push_back({compositeLabel(static_cast<int>(s), sp.label),
                                  Ket::productState(set.layout, factors), factors});
        }
    }

    // The claimed formula and the displayed ranges disagree by two here; the
    // set keeps the formula as claimedCount and countAudit reports both.
    if (set.actualCount() != oddEnumeratedCount(dims))
        throw FamilyConsistencyError("odd family: enumeration self-check failed");
    set.checkLabelsAndOrthogonality();
    return set;
}

}  // namespace loccdisc
