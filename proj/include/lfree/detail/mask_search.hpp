#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lfree/numeric.hpp"

namespace lfree::detail {

// Search routines over hypergraphs with at most 64 vertices, given as bit
// masks (vertex i -> bit i). A set is independent when it contains no edge
// entirely. All routines first reduce the edge list to its minimal antichain:
// supersets of another edge constrain nothing, for independence or for
// maximality. Empty edges are rejected.

// Size of a maximum independent set. Branch and bound in descending vertex
// order, seeded with a greedy solution, pruned with a disjoint-edge bound.
int64_t max_independent(int nbits, std::vector<uint64_t> edges);

// The lexicographically-first maximum independent set (preferring low
// vertices), as a mask. `size` must equal max_independent(...).
uint64_t max_independent_witness(int nbits, std::vector<uint64_t> edges, int64_t size);

// Number of independent sets (the empty set included).
BigInt count_independent(int nbits, std::vector<uint64_t> edges);

// Number of inclusion-maximal independent sets.
BigInt count_maximal_independent(int nbits, std::vector<uint64_t> edges);

// Calls `sink` once per maximal independent set, in the (deterministic)
// include-first search order over ascending vertices.
void for_each_maximal_independent(int nbits, std::vector<uint64_t> edges,
                                  const std::function<void(uint64_t)>& sink);

// Maximum number of vertex-disjoint edges in a graph with loops ({v} blocks
// just v). Vertices are 0..nvertices-1; pairs may repeat and are deduplicated.
// Components of degree <= 2 (paths/cycles) are solved in closed form; anything
// denser falls back to exhaustive branching, allowed only for <= 60 vertices.
int64_t max_matching(int64_t nvertices, std::vector<std::pair<int64_t, int64_t>> edges);

}  // namespace lfree::detail
