#pragma once

#include "loccdisc/protocol.hpp"

namespace loccdisc {

struct Diagnostics {
    std::vector<std::string> localityViolations;
    std::vector<std::string> nonProjectorOutcomes;
    std::vector<std::string> nonOrthogonalOutcomes;
    std::vector<std::string> incompleteNodes;   // no complement but defect != 0
    std::vector<std::string> unknownLeafLabels;
    std::vector<std::string> structureErrors;

    bool ok() const {
        return localityViolations.empty() && nonProjectorOutcomes.empty() &&
               nonOrthogonalOutcomes.empty() && incompleteNodes.empty() &&
               unknownLeafLabels.empty() && structureErrors.empty();
    }
};

// Structural checks only, never mutates: locality of every outcome against the
// owning party, operator symmetry/idempotence, pairwise operator orthogonality,
// and the completeness defect I - sum P_i per node. When `set` is given, leaf
// labels are checked against it.
Diagnostics validate(const ProtocolTree& tree, const StateSet* set = nullptr);

struct LeafHit {
    std::string path;  // outcome labels joined by '/', complement as '~'
    std::string declare;
    bool resourceDiscard = false;
    bool dupViolation = false;
    Rat probability;
    Ket leafKet;  // unnormalized post-measurement ket (kept only on request)
};

// Depth-first exact propagation of `input` through the tree. Branch weights
// are normSquared ratios; only leaves with nonzero probability are returned,
// ordered by path.
std::vector<LeafHit> simulate(const ProtocolTree& tree, const Ket& input, bool keepKets = false);

struct StateOutcome {
    std::string label;
    Rat identified;       // mass on leaves declaring this state
    Rat cross;            // mass on leaves declaring other states
    Rat otherFail;        // mass on FAIL leaves that are not resource discards
    Rat resourceDiscard;  // mass discarded by resource-measurement complements
    std::vector<LeafHit> leaves;
};

struct DiscriminationReport {
    bool postSelected = false;
    bool perfect = false;
    std::vector<StateOutcome> perState;
    std::vector<std::string> sharedLeaves;  // non-FAIL leaves reached by >= 2 states
    Diagnostics structural;

    const StateOutcome* find(const std::string& label) const;
};

// Simulates every state of `set` tensored with the resource ket. Perfect
// without post-selection: every state puts mass exactly 1 on its own leaves.
// Perfect under post-selection: no mass on other states' leaves or non-resource
// FAIL leaves, and a positive identified mass (which then equals the state's
// probability of surviving the resource measurements).
DiscriminationReport verifyPerfect(const ProtocolTree& tree, const StateSet& set,
                                   bool postSelected);

}  // namespace loccdisc
