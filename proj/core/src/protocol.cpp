#include "loccdisc/protocol.hpp"

#include <stdexcept>

namespace loccdisc {

SystemLayout ResourceSpec::ancillaLayout(const SystemLayout& treeLayout) const {
    std::vector<Register> regs;
    for (const auto& f : factors) {
        regs.push_back(treeLayout.reg(f.regX));
        regs.push_back(treeLayout.reg(f.regY));
    }
    return SystemLayout(std::move(regs));
}

Ket ResourceSpec::ket(const SystemLayout& treeLayout) const {
    if (factors.empty()) throw std::invalid_argument("ResourceSpec: no factors");
    std::vector<Ket> parts;
    for (const auto& f : factors) {
        const auto& rx = treeLayout.reg(f.regX);
        const auto& ry = treeLayout.reg(f.regY);
        if (rx.dim != f.dim || ry.dim != f.dim)
            throw std::invalid_argument("ResourceSpec: ancilla dims do not match factor dim");
        Ket mes(SystemLayout({rx, ry}));
        for (int i = 0; i < f.dim; ++i) mes.setAmplitude({i, i}, rat(1));
        parts.push_back(std::move(mes));
    }
    return parts.size() == 1 ? parts[0] : tensor(parts);
}

ProtoPtr ProtoNode::makeLeaf(Leaf l) {
    auto p = std::make_unique<ProtoNode>();
    p->leaf = std::make_unique<Leaf>(std::move(l));
    return p;
}

ProtoPtr ProtoNode::makeNode(MeasurementNode n) {
    auto p = std::make_unique<ProtoNode>();
    p->node = std::make_unique<MeasurementNode>(std::move(n));
    return p;
}

ProtoPtr cloneTree(const ProtoNode& n) {
    if (n.isLeaf()) return ProtoNode::makeLeaf(*n.leaf);
    MeasurementNode copy;
    copy.party = n.node->party;
    copy.outcomes = n.node->outcomes;
    for (const auto& c : n.node->children) copy.children.push_back(cloneTree(*c));
    if (n.node->complement) copy.complement = cloneTree(*n.node->complement);
    return ProtoNode::makeNode(std::move(copy));
}

}  // namespace loccdisc
