#pragma once

#include <string>

#include "loccdisc/engine.hpp"
#include "loccdisc/verify.hpp"

namespace loccdisc {

// All emitters produce deterministic, byte-stable JSON (fixed key order,
// two-space indent, trailing newline). Probabilities and matrix entries are
// exact fraction strings; ket amplitudes are [labels..., num, den] rows with
// 1-based labels, sorted lexicographically.

std::string ketToJson(const Ket& k);
Ket ketFromJson(const std::string& text);

std::string stateSetToJson(const StateSet& set);
StateSet stateSetFromJson(const std::string& text);

std::string protocolToJson(const ProtocolTree& tree);
ProtocolTree protocolFromJson(const std::string& text);

std::string discriminationReportToJson(const DiscriminationReport& report);
std::string witnessToJson(const WitnessResult& w);
std::string witnessesToJson(const std::vector<WitnessResult>& ws);
std::string setCheckToJson(const SetCheckReport& r);
std::string simulationToJson(const std::vector<std::pair<std::string, std::vector<LeafHit>>>& runs);

}  // namespace loccdisc
