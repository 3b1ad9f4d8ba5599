#include "loccdisc/state_set.hpp"

#include <set>

namespace loccdisc {

std::string familyName(Family f) {
    switch (f) {
        case Family::BipartiteEq1: return "bipartite_eq1";
        case Family::ExampleEq3: return "example_eq3";
        case Family::TripartiteEq6: return "tripartite_eq6";
        case Family::TripartiteG: return "tripartite_g";
        case Family::EvenS: return "even_s";
        case Family::OddSprime: return "odd_sprime";
    }
    throw std::invalid_argument("familyName: bad enum");
}

Family familyFromName(const std::string& name) {
    if (name == "bipartite_eq1") return Family::BipartiteEq1;
    if (name == "example_eq3") return Family::ExampleEq3;
    if (name == "tripartite_eq6") return Family::TripartiteEq6;
    if (name == "tripartite_g") return Family::TripartiteG;
    if (name == "even_s") return Family::EvenS;
    if (name == "odd_sprime") return Family::OddSprime;
    throw std::invalid_argument("unknown family '" + name + "'");
}

const LabeledState* StateSet::find(const std::string& label) const {
    for (const auto& s : states)
        if (s.label == label) return &s;
    return nullptr;
}

void StateSet::checkLabelsAndOrthogonality() const {
    std::set<std::string> seen;
    for (const auto& s : states) {
        if (!seen.insert(s.label).second)
            throw FamilyConsistencyError("duplicate state label '" + s.label + "'");
        if (s.ket.isZero())
            throw FamilyConsistencyError("state '" + s.label + "' is the zero ket");
    }
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (inner(states[i].ket, states[j].ket) != 0)
                throw FamilyConsistencyError("states '" + states[i].label + "' and '" +
                                             states[j].label + "' are not orthogonal");
}

}  // namespace loccdisc
