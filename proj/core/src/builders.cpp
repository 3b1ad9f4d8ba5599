#include "loccdisc/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "loccdisc/families.hpp"

namespace loccdisc {

namespace {

ProtoPtr failLeaf(bool resourceDiscard = false) {
    Leaf l;
    l.declare = Leaf::kFail;
    l.resourceDiscard = resourceDiscard;
    return ProtoNode::makeLeaf(std::move(l));
}

ProtoPtr declareLeaf(const std::string& label) { return ProtoNode::makeLeaf(Leaf{label, false, false}); }

std::vector<int> factorLabels(const ProductFactor& f) {
    std::vector<int> out;
    for (const auto& [label, c] : f.terms) out.push_back(label);
    return out;
}

// The +-/parity cascade that splits { target with a relative minus sign,
// stopper image with a plus sign } between two parties. The pm party projects
// onto (|uu> +- |vv>) across its principal/ancilla pair; the parity party then
// projects onto (|u> +- |v>) of its ancilla. Same-sign paths belong to the
// stopper, opposite-sign paths to the target.
ProtoPtr pairCascade(const SystemLayout& layout, const std::string& pmRegX,
                     const std::string& pmRegY, const std::string& parityReg, int u, int v,
                     const std::string& pmPlusLabel, const std::string& pmMinusLabel,
                     const std::string& parityPrefix, const std::string& targetLabel,
                     const std::string& stopperLabel) {
    auto parityNode = [&](bool underPlus) {
        MeasurementNode node;
        node.party = layout.reg(parityReg).party;
        node.outcomes.push_back(
            rayProjector(layout, parityReg, ProductFactor::plus(u, v), parityPrefix + "+"));
        node.outcomes.push_back(
            rayProjector(layout, parityReg, ProductFactor::minus(u, v), parityPrefix + "-"));
        node.children.push_back(declareLeaf(underPlus ? stopperLabel : targetLabel));
        node.children.push_back(declareLeaf(underPlus ? targetLabel : stopperLabel));
        node.complement = failLeaf();
        return ProtoNode::makeNode(std::move(node));
    };
    MeasurementNode pm;
    pm.party = layout.reg(pmRegX).party;
    pm.outcomes.push_back(
        pairRayProjector(layout, pmRegX, pmRegY, ProductFactor::plus(u, v), pmPlusLabel));
    pm.outcomes.push_back(
        pairRayProjector(layout, pmRegX, pmRegY, ProductFactor::minus(u, v), pmMinusLabel));
    pm.children.push_back(parityNode(true));
    pm.children.push_back(parityNode(false));
    pm.complement = failLeaf();
    return ProtoNode::makeNode(std::move(pm));
}

struct BipRegs {
    std::string prinA, prinB, ancA, ancB;  // principals (dims m, n) and ancillas (dim n)
};

// Theorem-1-shaped tree over one bipartite block. Root is the resource
// measurement on (ancB, prinB); leaves declare the block's own state labels,
// with the gated node's complement declaring the stopper.
ProtoPtr theorem1Core(const SystemLayout& layout, const BipRegs& regs, int m, int n,
                      const std::string& prefix) {
    const auto specs = bipartiteEq1Specs(m, n);
    const std::string stopper = specs.front().label;

    MeasurementNode gated;
    gated.party = layout.reg(regs.prinA).party;
    int seq = 0;
    for (const auto& sp : specs) {
        if (sp.kind == BipKind::Stopper) continue;
        ++seq;
        const std::string outLabel = prefix + "A" + std::to_string(seq);
        gated.outcomes.push_back(ancillaGatedProjector(layout, regs.ancA, factorLabels(sp.b),
                                                       regs.prinA, sp.a, outLabel));
        if (sp.b.terms.size() == 1) {
            gated.children.push_back(declareLeaf(sp.label));
        } else {
            const int u = sp.b.terms[0].first;
            const int v = sp.b.terms[1].first;
            gated.children.push_back(pairCascade(
                layout, regs.ancB, regs.prinB, regs.ancA, u, v,
                prefix + "B" + std::to_string(seq) + "1", prefix + "B" + std::to_string(seq) + "2",
                prefix + "a", sp.label, stopper));
        }
    }
    gated.complement = declareLeaf(stopper);

    MeasurementNode resource;
    resource.party = layout.reg(regs.prinB).party;
    resource.outcomes.push_back(
        matchedPairProjector(layout, regs.ancB, regs.prinB, prefix + "B1"));
    resource.children.push_back(ProtoNode::makeNode(std::move(gated)));
    resource.complement = failLeaf(true);
    return ProtoNode::makeNode(std::move(resource));
}

struct TriRegs {
    std::string C, B, A, ancA, ancB;  // ancillas have dim n3
};

// Theorem-3-shaped tree over one tripartite block; leaves declare the block's
// tripartite labels.
ProtoPtr theorem3Core(const SystemLayout& layout, const TriRegs& regs, int n1, int n2, int n3,
                      const std::string& prefix, std::vector<std::string>& notes) {
    const auto specs = tripartiteGSpecs(n1, n2, n3);
    const std::string stopper = specs.front().label;
    const std::string charlesParty = layout.reg(regs.C).party;

    // Gated-branch plan entry: operator cells are (ancilla label, B-column).
    struct Branch {
        const TripartiteStateSpec* spec = nullptr;       // defining T state / overlap
        std::vector<const TripartiteStateSpec*> vRiders; // V states caught by the same cells
        bool hBranch = false;
    };
    std::vector<Branch> plan;
    std::map<std::string, const TripartiteStateSpec*> hStates;  // by index
    struct VGroup {
        int column = 0;
        std::vector<const TripartiteStateSpec*> states;
    };
    std::vector<VGroup> vGroups;

    auto vColumnOf = [](const TripartiteStateSpec& sp) { return sp.b.terms[0].first; };

    std::vector<const TripartiteStateSpec*> singles, ipairs, pairsTail;
    const TripartiteStateSpec* overlap = nullptr;
    for (const auto& sp : specs) {
        switch (sp.kind) {
            case TriKind::Stopper: break;
            case TriKind::T:
                switch (sp.bip.kind) {
                    case BipKind::MPlusOne:
                    case BipKind::JState:
                    case BipKind::LState: singles.push_back(&sp); break;
                    case BipKind::IPair: ipairs.push_back(&sp); break;
                    default: pairsTail.push_back(&sp); break;  // MN, SState, TState
                }
                break;
            case TriKind::H:
                if (sp.index == n1)
                    overlap = &sp;
                else
                    hStates["H" + std::to_string(sp.index)] = &sp;
                break;
            case TriKind::V: {
                const int col = vColumnOf(sp);
                auto it = std::find_if(vGroups.begin(), vGroups.end(),
                                       [&](const VGroup& g) { return g.column == col; });
                if (it == vGroups.end())
                    vGroups.push_back({col, {&sp}});
                else
                    it->states.push_back(&sp);
                break;
            }
        }
    }
    if (!overlap) throw std::logic_error("theorem3Core: missing overlap state");

    for (auto* sp : singles) plan.push_back({sp, {}, false});
    for (auto* sp : ipairs) plan.push_back({sp, {}, false});
    plan.push_back({overlap, {}, true});
    for (auto* sp : pairsTail) plan.push_back({sp, {}, false});

    // A V group whose cell (n3, column) already lies inside a gated branch
    // rides that branch and is separated by Charles; otherwise it gets its own
    // gated outcome.
    auto cellsOf = [&](const Branch& br) {
        std::vector<std::pair<int, int>> cells;  // (ancilla label, B basis label)
        const auto& bip = br.spec->bip;
        const auto ancLabels = factorLabels(bip.b);
        if (br.hBranch || bip.a.terms.size() != 1) return cells;  // only basis columns matter
        for (int anc : ancLabels) cells.emplace_back(anc, bip.a.terms[0].first);
        return cells;
    };
    std::vector<VGroup> standalone;
    for (auto& g : vGroups) {
        Branch* carrier = nullptr;
        for (auto& br : plan)
            for (const auto& [anc, col] : cellsOf(br))
                if (anc == n3 && col == g.column) carrier = &br;
        if (carrier) {
            carrier->vRiders = g.states;
            notes.push_back(prefix + "V column " + std::to_string(g.column) +
                            " shares the gated branch of '" + carrier->spec->label +
                            "'; Charles separates them before the +-/parity cascade");
        } else {
            standalone.push_back(g);
        }
    }
    std::sort(standalone.begin(), standalone.end(),
              [](const VGroup& a, const VGroup& b) { return a.column < b.column; });

    MeasurementNode bobNode;
    bobNode.party = layout.reg(regs.B).party;
    int seq = 1;  // the resource outcome is "A1"; gated outcomes start at B1

    auto charlesBasisProj = [&](int i, const std::string& label) {
        return basisProjector(layout, regs.C, i, label);
    };

    auto pushBranch = [&](const Branch& br) {
        const auto& bip = br.spec->bip;
        const std::string bLabel = prefix + "B" + std::to_string(seq);
        if (br.hBranch) {
            bobNode.outcomes.push_back(ancillaGatedProjector(layout, regs.ancB, {n3}, regs.B,
                                                             bip.a, bLabel));
            MeasurementNode charles;
            charles.party = charlesParty;
            for (int i = 1; i <= n1; ++i) {
                charles.outcomes.push_back(
                    charlesBasisProj(i, prefix + "C" + std::to_string(seq) + "_" + std::to_string(i)));
                const std::string target =
                    (i == n1) ? overlap->label : hStates.at("H" + std::to_string(i))->label;
                charles.children.push_back(declareLeaf(target));
            }
            bobNode.children.push_back(ProtoNode::makeNode(std::move(charles)));
            ++seq;
            return;
        }

        bobNode.outcomes.push_back(ancillaGatedProjector(layout, regs.ancB, factorLabels(bip.b),
                                                         regs.B, bip.a, bLabel));
        auto cascade = [&](int u, int v) {
            return pairCascade(layout, regs.A, regs.ancA, regs.ancB, u, v, prefix + "Aa+",
                               prefix + "Aa-", prefix + "b", br.spec->label, stopper);
        };
        if (bip.b.terms.size() == 1) {
            bobNode.children.push_back(declareLeaf(br.spec->label));
        } else {
            const int u = bip.b.terms[0].first;
            const int v = bip.b.terms[1].first;
            if (br.vRiders.empty()) {
                bobNode.children.push_back(cascade(u, v));
            } else {
                MeasurementNode charles;
                charles.party = charlesParty;
                int ci = 1;
                for (auto* vs : br.vRiders) {
                    charles.outcomes.push_back(rayProjector(
                        layout, regs.C, ProductFactor::minus(vs->index, vs->index + 1),
                        prefix + "C" + std::to_string(seq) + "_" + std::to_string(ci++)));
                    charles.children.push_back(declareLeaf(vs->label));
                }
                charles.outcomes.push_back(
                    charlesBasisProj(n1, prefix + "C" + std::to_string(seq) + "_" + std::to_string(ci)));
                charles.children.push_back(cascade(u, v));
                charles.complement = declareLeaf(stopper);
                bobNode.children.push_back(ProtoNode::makeNode(std::move(charles)));
            }
        }
        ++seq;
    };

    for (const auto& br : plan) pushBranch(br);

    for (const auto& g : standalone) {
        const std::string bLabel = prefix + "B" + std::to_string(seq);
        bobNode.outcomes.push_back(ancillaGatedProjector(layout, regs.ancB, {n3}, regs.B,
                                                         ProductFactor::basis(g.column), bLabel));
        MeasurementNode charles;
        charles.party = charlesParty;
        int ci = 1;
        std::vector<bool> covered(n1, false);
        for (auto* vs : g.states) {
            charles.outcomes.push_back(
                rayProjector(layout, regs.C, ProductFactor::minus(vs->index, vs->index + 1),
                             prefix + "C" + std::to_string(seq) + "_" + std::to_string(ci++)));
            charles.children.push_back(declareLeaf(vs->label));
            charles.outcomes.push_back(
                rayProjector(layout, regs.C, ProductFactor::plus(vs->index, vs->index + 1),
                             prefix + "C" + std::to_string(seq) + "_" + std::to_string(ci++)));
            charles.children.push_back(declareLeaf(stopper));
            covered[vs->index - 1] = covered[vs->index] = true;
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            charles.complement = declareLeaf(stopper);
        bobNode.children.push_back(ProtoNode::makeNode(std::move(charles)));
        ++seq;
    }

    bobNode.complement = declareLeaf(stopper);

    MeasurementNode resource;
    resource.party = layout.reg(regs.A).party;
    resource.outcomes.push_back(matchedPairProjector(layout, regs.ancA, regs.A, prefix + "A1"));
    resource.children.push_back(ProtoNode::makeNode(std::move(bobNode)));
    resource.complement = failLeaf(true);
    return ProtoNode::makeNode(std::move(resource));
}

SystemLayout withBipAncillas(const SystemLayout& principals, int n) {
    return principals.concat(SystemLayout({{"a", "Alice", n, RegisterRole::Ancilla},
                                           {"b", "Bob", n, RegisterRole::Ancilla}}));
}

}  // namespace

ProtocolTree theorem1Protocol(int m, int n) {
    ProtocolTree tree;
    tree.family = (m == 4 && n == 5) ? Family::ExampleEq3 : Family::BipartiteEq1;
    tree.params = {m, n};
    tree.layout = withBipAncillas(bipartiteLayout(m, n), n);
    tree.resource.factors = {{"a", "b", n}};
    tree.notes.push_back(
        "each +- discrimination is a superposition projector on (b,B) followed by a parity "
        "projector on a; a lone two-term operator on (b,B) cannot split the pair");
    tree.root = theorem1Core(tree.layout, {"A", "B", "a", "b"}, m, n, "");
    return tree;
}

namespace {

ProtocolTree theorem3Tree(int n1, int n2, int n3, Family family) {
    ProtocolTree tree;
    tree.family = family;
    tree.params = {n1, n2, n3};
    SystemLayout anc({{"a", "Alice", n3, RegisterRole::Ancilla},
                      {"b", "Bob", n3, RegisterRole::Ancilla}});
    tree.layout = tripartiteLayout(n1, n2, n3).concat(anc);
    tree.resource.factors = {{"a", "b", n3}};
    tree.notes.push_back(
        "each +- discrimination is a superposition projector on (A,a) followed by a parity "
        "projector on b");
    tree.root = theorem3Core(tree.layout, {"C", "B", "A", "a", "b"}, n1, n2, n3, "", tree.notes);
    return tree;
}

}  // namespace

ProtocolTree theorem3Protocol(int n1, int n2, int n3) {
    return theorem3Tree(n1, n2, n3, Family::TripartiteG);
}

ProtocolTree tripartite456Protocol() {
    ProtocolTree tree = theorem3Tree(4, 5, 6, Family::TripartiteEq6);
    tree.discrepancies.push_back(
        "B10 substituted: |3><3|_b(x)|6><6|_B + |6><6|_b(x)|5><5|_B does not leave phi10 "
        "invariant; the tree uses (|3><3|_b + |6><6|_b)(x)|5><5|_B");
    tree.discrepancies.push_back(
        "phi10 image under A1 carries a relative minus sign, |333>-|666>, not |333>+|666>");
    return tree;
}

namespace {

// Sequential block composition. Each block leaf reports the block's own label;
// the final leaf maps the report tuple to a global label under the active-block
// rule. A tuple with two non-stopper reports is declared FAIL and flagged.
ProtoPtr composeChain(const std::vector<const ProtoNode*>& blockRoots,
                      const std::vector<std::string>& blockStoppers, std::size_t blockIdx,
                      std::vector<std::pair<int, std::string>> actives) {
    const ProtoNode& tmpl = *blockRoots[blockIdx];
    std::function<ProtoPtr(const ProtoNode&)> graft = [&](const ProtoNode& n) -> ProtoPtr {
        if (n.isLeaf()) {
            if (n.leaf->isFail()) return ProtoNode::makeLeaf(*n.leaf);
            auto nextActives = actives;
            if (n.leaf->declare != blockStoppers[blockIdx])
                nextActives.emplace_back(static_cast<int>(blockIdx) + 1, n.leaf->declare);
            if (blockIdx + 1 < blockRoots.size())
                return composeChain(blockRoots, blockStoppers, blockIdx + 1, std::move(nextActives));
            if (nextActives.empty()) return declareLeaf(compositeStopperLabel());
            if (nextActives.size() == 1)
                return declareLeaf(compositeLabel(nextActives[0].first, nextActives[0].second));
            Leaf dup;
            dup.declare = Leaf::kFail;
            dup.dupViolation = true;
            return ProtoNode::makeLeaf(std::move(dup));
        }
        MeasurementNode copy;
        copy.party = n.node->party;
        copy.outcomes = n.node->outcomes;
        for (const auto& c : n.node->children) copy.children.push_back(graft(*c));
        if (n.node->complement) copy.complement = graft(*n.node->complement);
        return ProtoNode::makeNode(std::move(copy));
    };
    return graft(tmpl);
}

}  // namespace

ProtocolTree composeEven(const std::vector<int>& dims) {
    const StateSet set = buildEvenS(dims);  // validates dims
    const std::size_t k = dims.size() / 2;

    ProtocolTree tree;
    tree.family = Family::EvenS;
    tree.params = dims;
    std::vector<Register> anc;
    for (std::size_t s = 1; s <= k; ++s) {
        const std::string num = std::to_string(s);
        anc.push_back({"a" + num, "Alice" + num, dims[2 * s - 1], RegisterRole::Ancilla});
        anc.push_back({"b" + num, "Bob" + num, dims[2 * s - 1], RegisterRole::Ancilla});
        tree.resource.factors.push_back({"a" + num, "b" + num, dims[2 * s - 1]});
    }
    tree.layout = set.layout.concat(SystemLayout(std::move(anc)));
    tree.notes.push_back("block trees run in sequence; a block in its fill state |11> is routed "
                         "to the block stopper leaf, so only the active block reports a state");

    std::vector<ProtoPtr> blocks;
    std::vector<const ProtoNode*> roots;
    std::vector<std::string> stoppers;
    for (std::size_t s = 1; s <= k; ++s) {
        const std::string num = std::to_string(s);
        BipRegs regs{"A" + num, "B" + num, "a" + num, "b" + num};
        blocks.push_back(theorem1Core(tree.layout, regs, dims[2 * s - 2], dims[2 * s - 1],
                                      "s" + num + ":"));
        roots.push_back(blocks.back().get());
        stoppers.push_back("phi1");
    }
    tree.root = composeChain(roots, stoppers, 0, {});
    return tree;
}

ProtocolTree composeOdd(const std::vector<int>& dims) {
    const StateSet set = buildOddSprime(dims);  // validates dims
    const std::size_t k = (dims.size() - 1) / 2;

    ProtocolTree tree;
    tree.family = Family::OddSprime;
    tree.params = dims;
    std::vector<Register> anc;
    anc.push_back({"a1", "Alice1", dims[2], RegisterRole::Ancilla});
    anc.push_back({"b1", "Bob1", dims[2], RegisterRole::Ancilla});
    tree.resource.factors.push_back({"a1", "b1", dims[2]});
    for (std::size_t s = 2; s <= k; ++s) {
        const std::string num = std::to_string(s);
        anc.push_back({"a" + num, "Alice" + num, dims[2 * s], RegisterRole::Ancilla});
        anc.push_back({"b" + num, "Bob" + num, dims[2 * s], RegisterRole::Ancilla});
        tree.resource.factors.push_back({"a" + num, "b" + num, dims[2 * s]});
    }
    tree.layout = set.layout.concat(SystemLayout(std::move(anc)));
    tree.notes.push_back("block 1 runs the tripartite tree, later blocks the bipartite tree; "
                         "fill states are routed to each block's stopper leaf");

    std::vector<ProtoPtr> blocks;
    std::vector<const ProtoNode*> roots;
    std::vector<std::string> stoppers;
    blocks.push_back(theorem3Core(tree.layout, {"C1", "B1", "A1", "a1", "b1"}, dims[0], dims[1],
                                  dims[2], "s1:", tree.notes));
    roots.push_back(blocks.back().get());
    stoppers.push_back("phi1");
    for (std::size_t s = 2; s <= k; ++s) {
        const std::string num = std::to_string(s);
        BipRegs regs{"A" + num, "B" + num, "a" + num, "b" + num};
        blocks.push_back(theorem1Core(tree.layout, regs, dims[2 * s - 1], dims[2 * s],
                                      "s" + num + ":"));
        roots.push_back(blocks.back().get());
        stoppers.push_back("phi1");
    }
    tree.root = composeChain(roots, stoppers, 0, {});
    return tree;
}

StateSet buildFamily(Family family, const std::vector<int>& params) {
    switch (family) {
        case Family::BipartiteEq1:
        case Family::ExampleEq3:
            if (params.size() != 2) throw std::invalid_argument("bipartite family needs 2 dims");
            return buildBipartiteEq1(params[0], params[1]);
        case Family::TripartiteEq6:
            if (!params.empty() && params != std::vector<int>{4, 5, 6})
                throw std::invalid_argument("the 17-state family is fixed at dims 4,5,6");
            return buildTripartiteEq6();
        case Family::TripartiteG:
            if (params.size() != 3) throw std::invalid_argument("tripartite family needs 3 dims");
            return buildTripartiteG(params[0], params[1], params[2]);
        case Family::EvenS: return buildEvenS(params);
        case Family::OddSprime: return buildOddSprime(params);
    }
    throw std::invalid_argument("buildFamily: bad enum");
}

}  // namespace loccdisc
