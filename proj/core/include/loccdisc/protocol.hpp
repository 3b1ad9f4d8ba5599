#pragma once

#include <memory>

#include "loccdisc/operators.hpp"
#include "loccdisc/state_set.hpp"

namespace loccdisc {

// Entangled resource: one maximally entangled pair per factor, realized on two
// ancilla registers of equal dimension held by the two named parties.
struct MesFactor {
    std::string regX, regY;  // ancilla register ids within the tree layout
    int dim = 0;
};

struct ResourceSpec {
    std::vector<MesFactor> factors;

    // Ancilla registers in resource order (regX, regY per factor).
    SystemLayout ancillaLayout(const SystemLayout& treeLayout) const;
    // Tensor of the unnormalized sum_i |ii> factors; normSquared = prod dims.
    Ket ket(const SystemLayout& treeLayout) const;
};

struct ProtoNode;
using ProtoPtr = std::unique_ptr<ProtoNode>;

struct Leaf {
    std::string declare;         // state label or "FAIL"
    bool resourceDiscard = false;  // complement of a resource measurement
    bool dupViolation = false;     // composed leaf where two blocks reported
    static constexpr const char* kFail = "FAIL";
    bool isFail() const { return declare == kFail; }
};

struct MeasurementNode {
    std::string party;
    std::vector<LocalOperator> outcomes;  // labels unique within the node
    std::vector<ProtoPtr> children;       // parallel to outcomes
    ProtoPtr complement;                  // null: outcomes must be complete
};

struct ProtoNode {
    // exactly one of the two is active
    std::unique_ptr<MeasurementNode> node;
    std::unique_ptr<Leaf> leaf;

    bool isLeaf() const { return leaf != nullptr; }
    static ProtoPtr makeLeaf(Leaf l);
    static ProtoPtr makeNode(MeasurementNode n);
};

ProtoPtr cloneTree(const ProtoNode& n);

struct ProtocolTree {
    SystemLayout layout;  // principal registers then ancillas
    Family family = Family::BipartiteEq1;
    std::vector<int> params;
    ResourceSpec resource;
    ProtoPtr root;
    // operator substitutions the builder made, kept apart from free-form build notes
    std::vector<std::string> discrepancies;
    std::vector<std::string> notes;
};

}  // namespace loccdisc
