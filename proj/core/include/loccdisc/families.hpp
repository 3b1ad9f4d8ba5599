#pragma once

#include "loccdisc/state_set.hpp"

namespace loccdisc {

// --- bipartite family (dims m <= n, 2n-1 states) -------------------------

enum class BipKind { Stopper, IPair, MPlusOne, JState, LState, MN, SState, TState };

struct BipartiteStateSpec {
    std::string label;  // "phi1".."phi{2n-1}"
    BipKind kind = BipKind::Stopper;
    int index = 0;      // the defining i / j / l / s / t
    ProductFactor a;    // factor on the dim-m side
    ProductFactor b;    // factor on the dim-n side
};

// The family as an ordered list of factor pairs. Generated index ranges that
// would spill past dimension n are clamped so the cardinality 2n-1 holds for
// both parities of n-m (and for m = n, where the |m>|3-(m+1)> state has no
// room either).
std::vector<BipartiteStateSpec> bipartiteEq1Specs(int m, int n);

// --- tripartite family (dims n1 <= n2 <= n3, 2(n1+n3)-3 states) ----------

enum class TriCase { A, B, C };

struct RelabelMap {
    TriCase caseKind = TriCase::A;
    std::vector<int> mapping;  // mapping[label-1] = relabeled label, 1-based
    int operator()(int label) const { return mapping[label - 1]; }
};

TriCase triCaseFor(int n2, int n3);
RelabelMap relabelMapFor(TriCase c, int n2);

enum class TriKind { Stopper, T, H, V };

struct TripartiteStateSpec {
    std::string label;
    TriKind kind = TriKind::Stopper;
    int index = 0;            // H/V row index; for T states, 0
    BipartiteStateSpec bip;   // underlying (n2,n3) spec when kind == T, and for
                              // the H-overlap state (kind == H, index == n1)
    bool hasBip = false;
    ProductFactor c, b, a;
};

// Ordered so that (4,5,6) reproduces the canonical 17-state numbering:
// stopper, non-overlap T states in bipartite order, the H/T overlap state,
// H(n1-1)..H(1), V(1)..V(n1-1).
std::vector<TripartiteStateSpec> tripartiteGSpecs(int n1, int n2, int n3,
                                                  std::optional<TriCase> caseOverride = {});

// --- constructors ---------------------------------------------------------

// sum_i |ii> on two fresh ancilla registers of dimension d; normSquared = d.
Ket buildMES(int d);

StateSet buildBipartiteEq1(int m, int n);
StateSet buildTripartiteEq6();
StateSet buildTripartiteG(int n1, int n2, int n3, std::optional<TriCase> caseOverride = {});
StateSet buildEvenS(const std::vector<int>& dims);
StateSet buildOddSprime(const std::vector<int>& dims);

// Layouts shared between the family constructors and the protocol builders.
SystemLayout bipartiteLayout(int m, int n);
SystemLayout tripartiteLayout(int n1, int n2, int n3);
SystemLayout evenLayout(const std::vector<int>& dims);
SystemLayout oddLayout(const std::vector<int>& dims);

// Composite label scheme for the even/odd families ("stopper", "blk2:phi7").
std::string compositeStopperLabel();
std::string compositeLabel(int block, const std::string& blockStateLabel);

// Claimed cardinality formula of the odd family versus what the displayed
// index ranges actually produce.
long oddClaimedCount(const std::vector<int>& dims);
long oddEnumeratedCount(const std::vector<int>& dims);

}  // namespace loccdisc
