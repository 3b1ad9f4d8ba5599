#pragma once

#include "loccdisc/rational.hpp"

namespace loccdisc {

// In-place reduced row echelon form over the rationals; returns the rank.
// Pivot choice is the first nonzero entry in column order, so results are
// deterministic for a given input.
std::size_t rref(RatMatrix& m);

std::size_t matrixRank(RatMatrix m);

// Basis of {x : m x = 0}, one vector per free column, deterministic order.
std::vector<std::vector<Rat>> nullspaceBasis(RatMatrix m, std::size_t cols);

}  // namespace loccdisc
