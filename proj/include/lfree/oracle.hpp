#pragma once

#include <cstdint>
#include <optional>

#include "lfree/equation.hpp"
#include "lfree/integer_set.hpp"
#include "lfree/links.hpp"
#include "lfree/numeric.hpp"

namespace lfree {

// Ceilings for the exhaustive computations; past a cap they raise CapError
// instead of running away. The LFREE_CAP_N environment variable, when set,
// overrides all three (the 64-vertex mask limit still applies to searches).
struct OracleCaps {
    int64_t mu = 40;
    int64_t count_free = 34;
    int64_t count_maximal = 30;

    static OracleCaps from_env();
};

struct BruteMu {
    int64_t value = 0;
    std::optional<IntegerSet> witness;  // lexicographically-first optimum
};

// Size of the largest free subset of [n], by branch and bound over the
// solution hypergraph.
BruteMu brute_mu(const LinearEquation& eq, int64_t n, bool want_witness = false,
                 const OracleCaps& caps = OracleCaps::from_env());

enum class CountKind { free_sets, maximal_sets };

// Exact number of free subsets of [n] (the empty set included), or of
// inclusion-maximal free subsets.
BigInt brute_counts(const LinearEquation& eq, int64_t n, CountKind kind,
                    const OracleCaps& caps = OracleCaps::from_env());

// Number of elements of [n] lying in no nontrivial solution within [n],
// found by enumerating every solution and marking its values.
int64_t brute_mu_star(const LinearEquation& eq, int64_t n,
                      const OracleCaps& caps = OracleCaps::from_env());

// Exact maximum matching of a graph-shaped hypergraph (all edges of size
// <= 2; loops allowed).
int64_t brute_max_matching(const LinkHypergraph& H);

}  // namespace lfree
