#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfree/numeric.hpp"

namespace lfree {

// Linear equation a1*x1 + ... + ak*xk = b over positive integer unknowns.
// Variable names are not kept; variables are positional (x1..xk in order of
// first appearance in the parsed text).
struct LinearEquation {
    std::vector<int64_t> coeffs;  // k >= 2 entries, all nonzero
    int64_t rhs = 0;

    std::size_t arity() const { return coeffs.size(); }

    // Validates the invariants (k >= 2, no zero coefficient).
    static LinearEquation make(std::vector<int64_t> coeffs, int64_t rhs);

    bool operator==(const LinearEquation&) const = default;
};

struct Classification {
    bool homogeneous = false;            // b == 0
    bool translation_invariant = false;  // b == 0 and sum of coefficients == 0
};

// Three-variable equation p*x + q*y = r*z reduced so that gcd(p,q,r) = 1 and
// p >= q. `ordered` records whether q >= r also holds (several formulas
// require it).
struct CanonicalTriple {
    int64_t p = 1, q = 1, r = 1;
    int64_t t = 1;            // gcd(p, q)
    int64_t r1 = 1, r2 = 1;   // p/t, q/t
    bool ordered = true;      // q >= r

    // Accepts any positive (p, q, r); swaps p/q into order and divides out the
    // common gcd.
    static CanonicalTriple make(int64_t p, int64_t q, int64_t r);

    LinearEquation equation() const;  // coefficients (p, q, -r), rhs 0
    std::string text() const;         // e.g. "63x+42y=41z"

    bool operator==(const CanonicalTriple&) const = default;
};

// Parses "side = side" where each side is a +/- separated list of terms; a
// term is an optionally signed coefficient times an identifier ("3x", "3*x",
// "x") or a bare integer. Right-hand variables are moved left (negated),
// constants are moved right. Throws ParseError (with position) on bad syntax,
// and on equations whose combined variable coefficients vanish or that have
// fewer than two variables.
LinearEquation parse_equation(const std::string& text);

// Canonical text: all variables on the left in order, constant on the right,
// e.g. "x+y-2z=0". parse_equation(print_equation(eq)) == eq.
std::string print_equation(const LinearEquation& eq);

Classification classify(const LinearEquation& eq);

// True when the satisfying tuple x is "trivial": the variable indices can be
// partitioned into classes that each repeat a single value and whose
// coefficients sum to zero. Grouping indices by value, any zero-sum class must
// stay inside one value group, and conversely a group whose coefficients sum
// to zero is itself a valid class — so the tuple is trivial exactly when every
// value group's coefficients sum to zero. Only translation-invariant
// equations admit trivial solutions; for all other equations this returns
// false. Throws DomainError when x has the wrong arity, has entries < 1, or
// does not satisfy the equation.
bool is_trivial_solution(const LinearEquation& eq, const std::vector<int64_t>& x);

// Reduces a homogeneous three-variable equation with two coefficients of one
// sign and one of the other to its canonical triple (negating first when the
// majority sign is negative). Throws DomainError for b != 0, arity != 3, or
// all coefficients of the same sign.
CanonicalTriple canonical_triple(const LinearEquation& eq);

// Identifies variables x_i and x_j (1-based): their coefficients are added at
// position min(i,j) and the other slot is removed. Throws DomainError when
// the indices are bad, the combined coefficient vanishes, or fewer than two
// variables would remain.
LinearEquation collapse_variables(const LinearEquation& eq, std::size_t i, std::size_t j);

// For a homogeneous equation and a partition of the 1-based variable indices
// into three non-empty parts, forms p' = sum over part1, q' = sum over part2,
// r' = -(sum over part3), requires p' >= q' >= r' >= 1, and returns the
// canonical triple of (p', q', r').
CanonicalTriple partition_to_triple(const LinearEquation& eq,
                                    const std::vector<std::size_t>& part1,
                                    const std::vector<std::size_t>& part2,
                                    const std::vector<std::size_t>& part3);

}  // namespace lfree
