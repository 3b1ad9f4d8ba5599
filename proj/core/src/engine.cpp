#include "loccdisc/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace loccdisc {

namespace {

void validateNode(const ProtoNode& n, const ProtocolTree& tree, const StateSet* set,
                  const std::string& path, Diagnostics& d) {
    if (n.isLeaf()) {
        if (set && !n.leaf->isFail() && !set->hasLabel(n.leaf->declare))
            d.unknownLeafLabels.push_back(path + ": declares unknown state '" + n.leaf->declare + "'");
        return;
    }
    const auto& node = *n.node;
    if (node.outcomes.size() != node.children.size()) {
        d.structureErrors.push_back(path + ": outcome/child count mismatch");
        return;
    }
    std::set<std::string> labels;
    for (const auto& op : node.outcomes) {
        if (!labels.insert(op.label).second)
            d.structureErrors.push_back(path + ": duplicate outcome label '" + op.label + "'");
        for (const auto& rid : op.registers) {
            if (!tree.layout.hasRegister(rid)) {
                d.structureErrors.push_back(path + "/" + op.label + ": unknown register '" + rid + "'");
            } else if (tree.layout.reg(rid).party != node.party) {
                d.localityViolations.push_back(path + "/" + op.label + ": register '" + rid +
                                               "' is not held by party '" + node.party + "'");
            }
        }
        if (!op.isProjector())
            d.nonProjectorOutcomes.push_back(path + "/" + op.label);
    }

    // pairwise orthogonality and the completeness defect, over the union of
    // registers touched by this node's outcomes
    std::vector<std::string> regsUnion;
    for (const auto& op : node.outcomes)
        for (const auto& rid : op.registers)
            if (std::find(regsUnion.begin(), regsUnion.end(), rid) == regsUnion.end() &&
                tree.layout.hasRegister(rid))
                regsUnion.push_back(rid);
    bool regsOk = true;
    for (const auto& op : node.outcomes)
        for (const auto& rid : op.registers)
            if (!tree.layout.hasRegister(rid)) regsOk = false;
    if (regsOk && !node.outcomes.empty()) {
        auto embed = [&](const LocalOperator& op) {
            // lift op onto the register union (tensor with identity elsewhere)
            std::vector<int> dims;
            long unionDim = 1;
            for (const auto& rid : regsUnion) {
                dims.push_back(tree.layout.reg(rid).dim);
                unionDim *= tree.layout.reg(rid).dim;
            }
            std::vector<std::size_t> opPos;
            for (const auto& rid : op.registers)
                opPos.push_back(static_cast<std::size_t>(
                    std::find(regsUnion.begin(), regsUnion.end(), rid) - regsUnion.begin()));
            auto subIndex = [&](long full) {
                std::vector<int> t(dims.size());
                for (std::size_t i = dims.size(); i-- > 0;) {
                    t[i] = static_cast<int>(full % dims[i]);
                    full /= dims[i];
                }
                long idx = 0;
                for (auto p : opPos) idx = idx * dims[p] + t[p];
                return idx;
            };
            auto restIndex = [&](long full) {
                std::vector<int> t(dims.size());
                for (std::size_t i = dims.size(); i-- > 0;) {
                    t[i] = static_cast<int>(full % dims[i]);
                    full /= dims[i];
                }
                long idx = 0;
                for (std::size_t i = 0; i < dims.size(); ++i)
                    if (std::find(opPos.begin(), opPos.end(), i) == opPos.end())
                        idx = idx * dims[i] + t[i];
                return idx;
            };
            RatMatrix m(unionDim, std::vector<Rat>(unionDim, rat(0)));
            for (long r = 0; r < unionDim; ++r)
                for (long c = 0; c < unionDim; ++c)
                    if (restIndex(r) == restIndex(c)) m[r][c] = op.matrix[subIndex(r)][subIndex(c)];
            return m;
        };
        std::vector<RatMatrix> lifted;
        for (const auto& op : node.outcomes) lifted.push_back(embed(op));
        for (std::size_t i = 0; i < lifted.size(); ++i)
            for (std::size_t j = i + 1; j < lifted.size(); ++j)
                if (!matIsZero(matMul(lifted[i], lifted[j])))
                    d.nonOrthogonalOutcomes.push_back(path + ": '" + node.outcomes[i].label +
                                                      "' and '" + node.outcomes[j].label + "'");
        RatMatrix sum = lifted[0];
        for (std::size_t i = 1; i < lifted.size(); ++i) sum = matAdd(sum, lifted[i]);
        RatMatrix defect = matIdentity(sum.size());
        for (std::size_t r = 0; r < sum.size(); ++r)
            for (std::size_t c = 0; c < sum.size(); ++c) defect[r][c] -= sum[r][c];
        if (!node.complement && !matIsZero(defect))
            d.incompleteNodes.push_back(path + ": outcomes incomplete and no complement branch");
    }

    for (std::size_t i = 0; i < node.children.size(); ++i)
        validateNode(*node.children[i], tree, set, path + "/" + node.outcomes[i].label, d);
    if (node.complement) validateNode(*node.complement, tree, set, path + "/~", d);
}

void simulateNode(const ProtoNode& n, const Ket& state, const Rat& inputNorm2,
                  const std::string& path, bool keepKets, std::vector<LeafHit>& out) {
    if (state.isZero()) return;
    if (n.isLeaf()) {
        LeafHit hit;
        hit.path = path.empty() ? "." : path;
        hit.declare = n.leaf->declare;
        hit.resourceDiscard = n.leaf->resourceDiscard;
        hit.dupViolation = n.leaf->dupViolation;
        hit.probability = state.normSquared() / inputNorm2;
        if (keepKets) hit.leafKet = state;
        out.push_back(std::move(hit));
        return;
    }
    const auto& node = *n.node;
    Ket residual = state;
    for (std::size_t i = 0; i < node.outcomes.size(); ++i) {
        Ket branch = applyLocal(node.outcomes[i], state);
        if (branch.isZero()) continue;
        residual = residual - branch;
        simulateNode(*node.children[i], branch, inputNorm2,
                     path.empty() ? node.outcomes[i].label : path + "/" + node.outcomes[i].label,
                     keepKets, out);
    }
    if (node.complement)
        simulateNode(*node.complement, residual, inputNorm2,
                     path.empty() ? "~" : path + "/~", keepKets, out);
}

}  // namespace

Diagnostics validate(const ProtocolTree& tree, const StateSet* set) {
    Diagnostics d;
    if (!tree.root) {
        d.structureErrors.push_back("tree has no root");
        return d;
    }
    validateNode(*tree.root, tree, set, "", d);
    return d;
}

std::vector<LeafHit> simulate(const ProtocolTree& tree, const Ket& input, bool keepKets) {
    if (!(input.layout() == tree.layout))
        throw std::invalid_argument("simulate: input layout does not match the tree layout");
    if (input.isZero()) throw std::invalid_argument("simulate: zero input");
    std::vector<LeafHit> out;
    simulateNode(*tree.root, input, input.normSquared(), "", keepKets, out);
    std::sort(out.begin(), out.end(),
              [](const LeafHit& a, const LeafHit& b) { return a.path < b.path; });
    return out;
}

const StateOutcome* DiscriminationReport::find(const std::string& label) const {
    for (const auto& s : perState)
        if (s.label == label) return &s;
    return nullptr;
}

DiscriminationReport verifyPerfect(const ProtocolTree& tree, const StateSet& set,
                                   bool postSelected) {
    DiscriminationReport report;
    report.postSelected = postSelected;
    report.structural = validate(tree, &set);

    const Ket resource = tree.resource.ket(tree.layout);
    std::map<std::string, std::set<std::string>> leafReachers;

    bool allGood = report.structural.ok();
    for (const auto& st : set.states) {
        StateOutcome oc;
        oc.label = st.label;
        oc.identified = oc.cross = oc.otherFail = oc.resourceDiscard = rat(0);
        oc.leaves = simulate(tree, tensor(st.ket, resource), false);
        for (const auto& hit : oc.leaves) {
            if (hit.declare == Leaf::kFail) {
                if (hit.resourceDiscard)
                    oc.resourceDiscard += hit.probability;
                else
                    oc.otherFail += hit.probability;
            } else if (hit.declare == st.label) {
                oc.identified += hit.probability;
                leafReachers[hit.path].insert(st.label);
            } else {
                oc.cross += hit.probability;
                leafReachers[hit.path].insert(st.label);
            }
        }
        const bool good = postSelected
                              ? (oc.cross == 0 && oc.otherFail == 0 && oc.identified > 0)
                              : (oc.cross == 0 && oc.otherFail == 0 && oc.resourceDiscard == 0 &&
                                 oc.identified == 1);
        allGood = allGood && good;
        report.perState.push_back(std::move(oc));
    }
    for (const auto& [path, states] : leafReachers)
        if (states.size() >= 2) report.sharedLeaves.push_back(path);
    report.perfect = allGood && report.sharedLeaves.empty();
    return report;
}

}  // namespace loccdisc
