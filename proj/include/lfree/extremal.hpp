#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfree/equation.hpp"
#include "lfree/integer_set.hpp"
#include "lfree/rate_expr.hpp"

namespace lfree {

// ---- candidate extremal sets ------------------------------------------------

// [floor(r(n-a)/(p+q))+1, n] where a is the unique 0 <= a < t with t | n-a.
// Empty whenever the lower end exceeds n (possible when r > p+q).
IntegerSet interval_In(const CanonicalTriple& T, int64_t n);

// {x in [n] : t does not divide x}; empty when t = 1.
IntegerSet residue_Tn(const CanonicalTriple& T, int64_t n);

// {x in [n] : x odd or 3x > 2n}; a free set for 3x+2y=2z specifically.
IntegerSet hybrid_An(int64_t n);

// ---- closed-form mu ---------------------------------------------------------

struct MuValue {
    int64_t value = 0;
    std::string case_label;  // "i", "ii", or "iii"
};

// Exact maximum free-set size when one of the three closed-form cases applies
// (p >= q >= r, gcd = 1 required):
//   (i)   q | p and p+q <= rq          -> ceil((q-1)n/q)
//   (ii)  q | p and p+q >= rq          -> ceil((p+q-r)(n-a)/(p+q)) + a, q|(n-a)
//   (iii) q does not divide p, t > 1, and r*D > (r1*r2-r1-r2+4)*r2*((r1+1)*D
//         + (r2-1)) with D = r1^2 + (r1-1)(r2-1) -> ceil((t-1)n/t)
// On the shared boundary p+q = rq cases (i) and (ii) agree; (i) is reported.
std::optional<MuValue> mu_formula(const CanonicalTriple& T, int64_t n);

// The individual case values and the case-(iii) side condition, exposed so
// tests can check the boundary agreement and the razor-thin inequality.
int64_t mu_case_i(const CanonicalTriple& T, int64_t n);
int64_t mu_case_ii(const CanonicalTriple& T, int64_t n);
int64_t mu_case_iii(const CanonicalTriple& T, int64_t n);
bool mu_case_iii_condition(const CanonicalTriple& T);

struct MultivarMu {
    int64_t lo = 0;
    int64_t hi = 0;
    std::string case_label;  // "i", "ii", or "iii"
    bool exact() const { return lo == hi; }
};

// Closed-form bounds for a homogeneous equation in up to six variables: the
// positive and negative coefficients are grouped as a1..ak / b1..bl on the
// left against c1..cm on the right, primed sums p' >= q' >= r' >= 1 are formed
// over every split of the left group, and the first applicable case wins:
//   (i)   m = 1, l = 1, q' = b1 divides every a_i, p+q <= rq (exact)
//   (iii) q does not divide p, m = 1, t*t' divides every a_i and b_j, same
//         side condition as mu_formula (exact)
//   (ii)  q | p and p+q >= rq (two-sided interval)
// where t' = gcd(p',q',r'), p = p'/t' etc. Among case-(ii) candidates the
// narrowest interval is kept. Returns nullopt when no split fits any case.
std::optional<MultivarMu> mu_formula_multivar(const LinearEquation& eq, int64_t n);

// ---- small-element caps and mu* ---------------------------------------------

// The three terms of the matching-size formula
// floor(rM/(r2(p+q))) + (r1r2-r1-r2+1) * blocks, with
// blocks = max(0, floor(floor((rM*r2 - r1(p+q)) / (r1*r2*(p+q))) / (r1*r2))).
struct MatchingTerms {
    int64_t e1 = 0;
    int64_t per_block = 0;
    int64_t blocks = 0;
    int64_t total() const { return e1 + per_block * blocks; }
};
MatchingTerms matching_count_terms(const CanonicalTriple& T, int64_t M);

// Cap on how many elements of [ceil(rM/q)-1] a free set containing M can
// hold: ceil(rM/q) - 1 - (matching size). Requires t | M and p >= q >= r.
int64_t small_elements_bound(const CanonicalTriple& T, int64_t M);

// Whole-set cap when M is the largest t-divisible element of the free set:
// M - (matching size) + ceil((n-M)(t-1)/t). Requires M <= n.
int64_t small_elements_bound(const CanonicalTriple& T, int64_t M, int64_t n);

enum class MuStarMode {
    exact_set,  // true count of elements of [n] lying in no non-trivial solution
    formula,    // ceil((n - floor((rn-p)/q)) (t-1)/t), which can misalign
};

// Number of elements of [n] in no non-trivial solution of px+qy=rz over [n].
// exact_set counts by residue arithmetic (role by role: x, y, or z slot);
// formula evaluates the printed ceiling expression. The two differ at
// specific n, e.g. (2,2,1) at n=20 gives 5 vs 6. Requires p >= q >= r.
int64_t mu_star(const CanonicalTriple& T, int64_t n, MuStarMode mode);

// ---- growth-rate bounds -----------------------------------------------------

struct UpperRate {
    Rational C;     // 1 - t(p^2 + (p-t)(q-t)) / (p^2 (p+q)), in [1/2, 1-t/(p+q)]
    RateExpr rate;  // C * r/q
};

// Upper bound 2^(rate*n) on the number of maximal free sets. Requires
// p >= q >= r, gcd = 1.
UpperRate fmax_upper_rate(const CanonicalTriple& T);

// Same bound for p1 x1 + ... + pk xk = r z with p1 >= ... >= pk >= r >= 1,
// gcd(p1..pk, r) = 1, and gcd(p,q) = gcd(p1,...,pk) where p = p1+...+p(k-1),
// q = pk. The all-negated orientation is accepted and normalized first.
UpperRate fmax_upper_rate_multivar(const LinearEquation& eq);

// Exponent of the lower bound 2^e on maximal free sets for qx+qy=rz,
// q > r >= 1, gcd(q,r)=1: e = ceil(floor((rn-rq^2)/(2q)) (q-1)/q) - 1.
int64_t fmax_lower_exponent(int64_t q, int64_t r, int64_t n);

// ---- best-bound case analysis -----------------------------------------------

struct BoundEntry {
    std::string name;  // "max1", "max2", "max3", "MainT1"
    RateExpr rate;
    std::string conditions;
};

struct BoundReport {
    CanonicalTriple equation;
    std::vector<BoundEntry> applicable;
    std::string best;  // name of a minimal-rate entry
    RateExpr best_rate;
    std::string case_label;  // "i(a)", "i(b)", "i(c)", "ii(a)", "ii(b)"
    std::optional<Rational> lower_rate;  // known lower-bound rate for qx+qy=rz
};

// Selects the minimal exponent rate among
//   max1:   (mud - mu*d)/3 * log2(3)
//   max2:   (mud - mu*d)/2        (only r=1, q|p, p <= q^2-q)
//   max3:   mud * r/q
//   MainT1: C * r/q
// where mud / mu*d are the asymptotic densities of the closed-form mu and mu*
// expressions, and labels the triple by the case analysis (decided with exact
// log2(3) power comparisons). Requires p >= q >= r, p >= 2, and a determinable
// mu density; throws DomainError otherwise.
BoundReport best_bound(const CanonicalTriple& T);

}  // namespace lfree
