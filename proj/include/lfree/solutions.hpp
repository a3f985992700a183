#pragma once

#include <cstdint>
#include <vector>

#include "lfree/equation.hpp"
#include "lfree/integer_set.hpp"

namespace lfree {

// One k-tuple (x_1, ..., x_k) of integers in [1, n] satisfying the equation.
using Solution = std::vector<int64_t>;

// All non-trivial solutions of `eq` with every variable in [1, n], in
// lexicographic order. Solutions that merely repeat values still count unless
// they are trivial in the translation-invariant sense (each value class has
// coefficients summing to zero). Enumeration solves for the variable with the
// largest |coefficient| (ties resolved toward the last index) and loops over
// the rest, so the work is O(n^{k-1}) tuples. Arity is capped at 6.
std::vector<Solution> enumerate_solutions(const LinearEquation& eq, int64_t n);

// True when no non-trivial solution of `eq` lies entirely inside `s`.
bool is_free(const LinearEquation& eq, const IntegerSet& s);

// Hypergraph on [1, n] whose edges are the supports (distinct value sets) of
// the non-trivial solutions of `eq`; edges are deduplicated and sorted
// lexicographically as ascending vertex lists.
struct SolutionHypergraph {
    int64_t n = 0;
    std::vector<std::vector<int64_t>> edges;

    // Bit masks of the edges (vertex v -> bit v-1). Requires n <= 64.
    std::vector<uint64_t> edge_masks() const;
};

SolutionHypergraph solution_hypergraph(const LinearEquation& eq, int64_t n);

}  // namespace lfree
