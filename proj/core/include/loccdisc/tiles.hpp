#pragma once

#include <string>
#include <vector>

namespace loccdisc {

// Text rendering of a bipartite family as a tile grid: rows are the dim-m
// side's basis labels, columns the dim-n side's, and each cell lists the
// states supported there. The stopper covers everything and is omitted.
std::string renderBipartiteTiles(int m, int n);

// Per-block rendering for the even family (one grid per bipartite block).
std::string renderEvenTiles(const std::vector<int>& dims);

}  // namespace loccdisc
