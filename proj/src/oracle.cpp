#include "lfree/oracle.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "lfree/detail/mask_search.hpp"
#include "lfree/errors.hpp"
#include "lfree/solutions.hpp"

namespace lfree {

OracleCaps OracleCaps::from_env() {
    OracleCaps caps;
    if (const char* env = std::getenv("LFREE_CAP_N")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0') throw DomainError("LFREE_CAP_N must be an integer");
        caps.mu = caps.count_free = caps.count_maximal = v;
    }
    return caps;
}

namespace {

void check_cap(int64_t n, int64_t cap, const char* what, bool needs_masks = true) {
    if (n < 0) throw DomainError("n must be nonnegative");
    if (n > cap)
        throw CapError(std::string(what) + " is capped at n = " + std::to_string(cap) +
                       " (raise LFREE_CAP_N to override)");
    if (needs_masks && n > 64) throw CapError(std::string(what) + " needs n <= 64");
}

}  // namespace

BruteMu brute_mu(const LinearEquation& eq, int64_t n, bool want_witness, const OracleCaps& caps) {
    check_cap(n, caps.mu, "exhaustive mu");
    const std::vector<uint64_t> masks = solution_hypergraph(eq, n).edge_masks();
    BruteMu out;
    const int nbits = static_cast<int>(n);
    out.value = detail::max_independent(nbits, masks);
    if (want_witness)
        out.witness = IntegerSet::from_mask(n, detail::max_independent_witness(nbits, masks,
                                                                               out.value));
    return out;
}

BigInt brute_counts(const LinearEquation& eq, int64_t n, CountKind kind, const OracleCaps& caps) {
    const bool maximal = kind == CountKind::maximal_sets;
    check_cap(n, maximal ? caps.count_maximal : caps.count_free,
              maximal ? "maximal-set counting" : "free-set counting");
    const std::vector<uint64_t> masks = solution_hypergraph(eq, n).edge_masks();
    const int nbits = static_cast<int>(n);
    return maximal ? detail::count_maximal_independent(nbits, masks)
                   : detail::count_independent(nbits, masks);
}

int64_t brute_mu_star(const LinearEquation& eq, int64_t n, const OracleCaps& caps) {
    check_cap(n, caps.mu, "solution enumeration", /*needs_masks=*/false);
    std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
    for (const Solution& sol : enumerate_solutions(eq, n))
        for (int64_t v : sol) hit[static_cast<std::size_t>(v)] = 1;
    int64_t count = 0;
    for (int64_t v = 1; v <= n; ++v)
        if (!hit[static_cast<std::size_t>(v)]) ++count;
    return count;
}

int64_t brute_max_matching(const LinkHypergraph& H) {
    const std::vector<int64_t> verts = H.vertices.members();
    std::map<int64_t, int64_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int64_t>(i);
    std::vector<std::pair<int64_t, int64_t>> edges;
    edges.reserve(H.edges.size());
    for (const auto& edge : H.edges) {
        if (edge.size() > 2) throw DomainError("matching needs a graph, found a hyperedge");
        if (edge.empty()) throw DomainError("empty edge");
        const auto a = index.find(edge.front());
        const auto b = index.find(edge.back());
        if (a == index.end() || b == index.end())
            throw DomainError("edge uses a value outside the vertex set");
        edges.emplace_back(a->second, b->second);
    }
    return detail::max_matching(static_cast<int64_t>(verts.size()), std::move(edges));
}

}  // namespace lfree
