#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loccdisc/ket.hpp"

namespace loccdisc {

enum class Family { BipartiteEq1, ExampleEq3, TripartiteEq6, TripartiteG, EvenS, OddSprime };

std::string familyName(Family f);
Family familyFromName(const std::string& name);

// Raised when a constructed family violates its own guarantees (cardinality
// formula, label uniqueness, pairwise orthogonality).
struct FamilyConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LabeledState {
    std::string label;
    Ket ket;
    // Per-principal-register factor structure, in layout order. Present for
    // constructed families (drives tiles and reporting); empty after JSON round
    // trips, which carry amplitudes only.
    std::vector<ProductFactor> factors;
};

struct StateSet {
    Family family = Family::BipartiteEq1;
    std::vector<int> params;
    SystemLayout layout;
    std::vector<LabeledState> states;
    long claimedCount = 0;
    std::string stopperLabel;

    long actualCount() const { return static_cast<long>(states.size()); }
    const LabeledState* find(const std::string& label) const;
    bool hasLabel(const std::string& label) const { return find(label) != nullptr; }

    // Throws FamilyConsistencyError on duplicate labels or a nonzero pairwise
    // inner product. Called by every constructor.
    void checkLabelsAndOrthogonality() const;
};

}  // namespace loccdisc
