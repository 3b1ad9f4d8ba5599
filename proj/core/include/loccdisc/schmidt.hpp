#pragma once

#include <string>
#include <vector>

#include "loccdisc/ket.hpp"

namespace loccdisc {

struct SchmidtInfo {
    std::size_t rank = 0;
    // true when M M^T is a nonzero multiple of the identity on the first
    // group's index set, i.e. all Schmidt coefficients are equal (the
    // maximally-entangled shape at this rank).
    bool balanced = false;
    Rat scale;  // the multiple when balanced
};

// Exact rank of the amplitude matrix of `x` reshaped along the bipartition
// (groupA | groupB); the two groups must disjointly cover every register.
SchmidtInfo schmidtRankAcross(const Ket& x, const std::vector<std::string>& groupA,
                              const std::vector<std::string>& groupB);

}  // namespace loccdisc
