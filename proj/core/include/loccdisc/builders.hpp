#pragma once

#include "loccdisc/protocol.hpp"

namespace loccdisc {

// Resource measurement first (sum_i |ii><ii| coupling the larger system to its
// ancilla), then one gated outcome per non-stopper state, each followed where
// needed by a +-/parity cascade that splits the surviving pair. The node
// complement is the stopper's leaf.
ProtocolTree theorem1Protocol(int m, int n);

// The 17-state walkthrough on C4 x B5 x A6, outcome labels matching the
// A1 / B1..B11 / C9_i / C10_i / C11_i naming. Carries a discrepancy ledger for
// the two operator substitutions the walkthrough forces.
ProtocolTree tripartite456Protocol();

// General tripartite tree; V-states ride the gated branch whose cells already
// cover them and are split off by Charles before the +-/parity cascade runs.
ProtocolTree theorem3Protocol(int n1, int n2, int n3);

// Block-sequential composition: each block runs its own tree on its own
// registers and ancilla pair; leaves map per-block results to a global label
// under the active-block rule (two non-stopper reports is a dead branch).
ProtocolTree composeEven(const std::vector<int>& dims);
ProtocolTree composeOdd(const std::vector<int>& dims);

// The state set a protocol discriminates, rebuilt from its family tag.
StateSet buildFamily(Family family, const std::vector<int>& params);

}  // namespace loccdisc
