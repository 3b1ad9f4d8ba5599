#pragma once

#include "loccdisc/schmidt.hpp"
#include "loccdisc/state_set.hpp"

namespace loccdisc {

// Exact matrix of pairwise inner products; diagonal entries are the state
// normSquared values, off-diagonals must vanish for a valid set.
RatMatrix gramMatrix(const StateSet& set);
bool gramIsDiagonal(const RatMatrix& g);

struct ProductCertRow {
    std::string label;
    std::vector<std::pair<std::string, std::size_t>> rankPerPartyCut;  // (party, rank)
    bool allRankOne = true;
};
// Schmidt rank across every principal-party-vs-rest bipartition, per state.
std::vector<ProductCertRow> productCertificate(const StateSet& set);

struct WitnessResult {
    std::string party;
    std::size_t solutionDimension = 0;
    std::vector<RatMatrix> basis;  // symmetric solutions E, one per dimension
    bool trivialOnly = false;      // solution space == span{identity}
};

// Solves <phi_i| (E (x) I) |phi_j> = 0 for all i != j over symmetric rational
// E on the party's registers. The identity always solves (the set is
// orthogonal); trivialOnly for every party witnesses that no party can make a
// nontrivial orthogonality-preserving first measurement. Sufficient evidence
// for local indistinguishability, not a full multi-round proof.
WitnessResult indistinguishabilityWitness(const StateSet& set, const std::string& party);

struct CountReport {
    long claimed = 0;
    long actual = 0;
    bool match() const { return claimed == actual; }
    std::string detail;
};
// Actual cardinality versus the family's claimed formula.
CountReport countAudit(const StateSet& set);

struct SetCheckReport {
    Family family = Family::BipartiteEq1;
    std::vector<int> params;
    bool gramOk = false;
    bool productOk = false;
    CountReport count;
    std::vector<WitnessResult> witness;  // one per principal party
    bool ok() const { return gramOk && productOk && count.match(); }
};
// Gram, product structure, cardinality and the per-party witness in one pass.
SetCheckReport checkSet(const StateSet& set);

}  // namespace loccdisc
