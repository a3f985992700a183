#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfree/equation.hpp"
#include "lfree/integer_set.hpp"
#include "lfree/numeric.hpp"
#include "lfree/solutions.hpp"

namespace lfree {

// Hypergraph on a subset of [n]: vertices carry their original values, each
// edge is the sorted support (within the vertex set) of a witnessing solution.
struct LinkHypergraph {
    IntegerSet vertices;
    std::vector<std::vector<int64_t>> edges;  // sorted supports, lexicographic order
    std::vector<Solution> witnesses;          // parallel to edges, lex-first witness
};

// Vertex-disjoint edge collection; a loop (v,v) occupies its vertex alone.
struct Matching {
    std::vector<std::pair<int64_t, int64_t>> pairs;  // each normalized lo <= hi
    int64_t loop_count = 0;

    int64_t size() const { return static_cast<int64_t>(pairs.size()); }

    // Normalizes pair order, checks vertex-disjointness, counts loops.
    static Matching make(std::vector<std::pair<int64_t, int64_t>> pairs);
};

// The graph on [ceil(rM/q) - 1] whose edges {x, y} are the solutions of
// px + qy = rM; its matchings limit how many elements below M an L-free set
// containing M can keep. Loops are the single-vertex edges. Requires the
// ordered triple and t | M, M >= 1.
LinkHypergraph graph_GM(const CanonicalTriple& T, int64_t M);

// The explicit matching in G_M whose size equals matching_count_terms(T, M):
// a first run of e1 edges stepping (x + a*r2, y - a*r1) from the smallest
// valid x, then `blocks` full blocks of r1*r2 steps each keeping the
// per_block edges that avoid the residues hit by the first run. Internal
// consistency (disjointness, edge equation, range, size formula, at most one
// loop) is asserted; violations throw Error.
Matching gm1_matching(const CanonicalTriple& T, int64_t M);

// Link hypergraph of S over the pool B (disjoint, same universe): vertices B,
// one edge per distinct B-support of a nontrivial solution taking all values
// in S ∪ B and at least one value in B. Solutions lying entirely inside S do
// not appear (their support would be empty); extending S by X ⊆ B stays free
// exactly when X is independent here, provided S itself is free.
LinkHypergraph link_hypergraph(const LinearEquation& eq, const IntegerSet& S,
                               const IntegerSet& B);

enum class MisMode { list, count };

struct MisResult {
    BigInt count = 0;
    std::vector<IntegerSet> sets;  // filled in list mode, ascending mask order
};

// Maximal independent sets of the hypergraph (maximal with respect to set
// inclusion among independent subsets of the vertex set). At most 64 vertices.
MisResult mis_enumerate(const LinkHypergraph& H, MisMode mode);

// The lower-bound gadget for qx + qy = rz: S = {M} with M = q^2 * floor(n/q^2),
// pool B = {z in [n] : q does not divide z}, and the induced matching
// {i, W - i} (W = rM/q) over i in B below W/2. Its span has exactly 2^|pairs|
// maximal independent sets, each extending to a distinct maximal free set.
struct InducedInstance {
    IntegerSet S;
    IntegerSet B;
    Matching matching;
    int64_t M = 0;
    int64_t W = 0;
};

// Builds the gadget and asserts it is an induced matching in the link of S
// (violations throw Error). Requires q > r >= 1, gcd(q, r) = 1, and n large
// enough that M > 0.
InducedInstance induced_matching_instance(int64_t q, int64_t r, int64_t n);

}  // namespace lfree
