#include "lfree/solutions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lfree/errors.hpp"
#include "lfree/numeric.hpp"

namespace lfree {

namespace {

// Index of the variable to solve for: largest |coefficient|, ties toward the
// last index so x+y=z solves for z and enumerates (x, y) pairs.
std::size_t pivot_index(const LinearEquation& eq) {
    std::size_t best = 0;
    int64_t best_abs = 0;
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
        const int64_t a = std::llabs(eq.coeffs[i]);
        if (a >= best_abs) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

}  // namespace

std::vector<Solution> enumerate_solutions(const LinearEquation& eq, int64_t n) {
    const std::size_t k = eq.arity();
    if (k > 6) throw DomainError("solution enumeration supports at most 6 variables");
    if (n < 0) throw DomainError("n must be nonnegative");

    const std::size_t piv = pivot_index(eq);
    const int64_t a_piv = eq.coeffs[piv];
    const bool drop_trivial = classify(eq).translation_invariant;

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < k; ++i)
        if (i != piv) rest.push_back(i);

    std::vector<Solution> out;
    Solution tuple(k, 1);

    // Odometer over the non-pivot variables.
    std::vector<int64_t> vals(rest.size(), 1);
    if (n == 0) return out;
    while (true) {
        BigInt partial = eq.rhs;
        for (std::size_t j = 0; j < rest.size(); ++j)
            partial -= BigInt(eq.coeffs[rest[j]]) * vals[j];
        if (partial % a_piv == 0) {
            const BigInt x = partial / a_piv;
            if (x >= 1 && x <= n) {
                for (std::size_t j = 0; j < rest.size(); ++j) tuple[rest[j]] = vals[j];
                tuple[piv] = static_cast<int64_t>(x);
                if (!(drop_trivial && is_trivial_solution(eq, tuple))) out.push_back(tuple);
            }
        }
        std::size_t j = rest.size();
        while (j > 0 && vals[j - 1] == n) vals[--j] = 1;
        if (j == 0) break;
        ++vals[j - 1];
    }

    std::sort(out.begin(), out.end());
    return out;
}

bool is_free(const LinearEquation& eq, const IntegerSet& s) {
    const std::size_t k = eq.arity();
    if (k > 6) throw DomainError("freeness check supports at most 6 variables");
    const std::vector<int64_t> mem = s.members();
    if (mem.empty()) return true;

    const std::size_t piv = pivot_index(eq);
    const int64_t a_piv = eq.coeffs[piv];
    const bool drop_trivial = classify(eq).translation_invariant;

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < k; ++i)
        if (i != piv) rest.push_back(i);

    Solution tuple(k, 0);
    std::vector<std::size_t> idx(rest.size(), 0);
    while (true) {
        BigInt partial = eq.rhs;
        for (std::size_t j = 0; j < rest.size(); ++j)
            partial -= BigInt(eq.coeffs[rest[j]]) * mem[idx[j]];
        if (partial % a_piv == 0) {
            const BigInt x = partial / a_piv;
            if (x >= 1 && x <= s.universe() && s.contains(static_cast<int64_t>(x))) {
                for (std::size_t j = 0; j < rest.size(); ++j) tuple[rest[j]] = mem[idx[j]];
                tuple[piv] = static_cast<int64_t>(x);
                if (!(drop_trivial && is_trivial_solution(eq, tuple))) return false;
            }
        }
        std::size_t j = rest.size();
        while (j > 0 && idx[j - 1] + 1 == mem.size()) idx[--j] = 0;
        if (j == 0) break;
        ++idx[j - 1];
    }
    return true;
}

std::vector<uint64_t> SolutionHypergraph::edge_masks() const {
    if (n > 64) throw DomainError("mask form is limited to universes of size <= 64");
    std::vector<uint64_t> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        uint64_t m = 0;
        for (int64_t v : e) m |= uint64_t{1} << (v - 1);
        out.push_back(m);
    }
    return out;
}

SolutionHypergraph solution_hypergraph(const LinearEquation& eq, int64_t n) {
    SolutionHypergraph g;
    g.n = n;
    std::set<std::vector<int64_t>> supports;
    for (const Solution& sol : enumerate_solutions(eq, n)) {
        std::vector<int64_t> support(sol);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        supports.insert(std::move(support));
    }
    g.edges.assign(supports.begin(), supports.end());
    return g;
}

}  // namespace lfree
