#include "lfree/detail/mask_search.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "lfree/errors.hpp"

namespace lfree::detail {

namespace {

uint64_t bit_of(int v) { return uint64_t{1} << v; }

uint64_t full_mask(int nbits) {
    return nbits >= 64 ? ~uint64_t{0} : (uint64_t{1} << nbits) - 1;
}

// Deduplicates and keeps only edges that contain no other edge. A set with no
// minimal edge inside it has no edge inside it at all, and a vertex addition
// completes some edge iff it completes a minimal one, so every routine here
// may work on the antichain. Loops ({v}) dominate everything through v.
std::vector<uint64_t> minimal_antichain(std::vector<uint64_t> edges, int nbits) {
    if (nbits < 0 || nbits > 64) throw DomainError("vertex count must be within [0, 64]");
    const uint64_t full = full_mask(nbits);
    for (uint64_t e : edges) {
        if (e == 0) throw DomainError("empty edge");
        if (e & ~full) throw DomainError("edge uses a vertex outside the graph");
    }
    std::sort(edges.begin(), edges.end(), [](uint64_t a, uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<uint64_t> keep;
    keep.reserve(edges.size());
    for (uint64_t e : edges) {
        bool dominated = false;
        for (uint64_t k : keep)
            if ((k & e) == k) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(e);
    }
    return keep;
}

std::vector<std::vector<uint32_t>> incidence(const std::vector<uint64_t>& edges, int nbits) {
    std::vector<std::vector<uint32_t>> at(static_cast<std::size_t>(nbits));
    for (uint32_t i = 0; i < edges.size(); ++i)
        for (uint64_t m = edges[i]; m; m &= m - 1) at[std::countr_zero(m)].push_back(i);
    return at;
}

// Greedy count of alive edges with pairwise-disjoint undecided parts; each
// forces at least one exclusion, so max IS <= |cur| + |avail| - count.
int forced_exclusions(const std::vector<uint64_t>& edges, uint64_t cur, uint64_t avail) {
    const uint64_t world = cur | avail;
    uint64_t used = 0;
    int count = 0;
    for (uint64_t e : edges) {
        if (e & ~world) continue;
        const uint64_t ea = e & avail;
        if (ea == 0 || (ea & used)) continue;
        used |= ea;
        ++count;
    }
    return count;
}

struct IndependenceSearch {
    int n = 0;
    std::vector<uint64_t> edges;  // minimal antichain, sorted small-first
    std::vector<std::vector<uint32_t>> at;

    explicit IndependenceSearch(int nbits, std::vector<uint64_t> raw)
        : n(nbits), edges(minimal_antichain(std::move(raw), nbits)), at(incidence(edges, nbits)) {}

    bool can_add(uint64_t cur, int v) const {
        const uint64_t next = cur | bit_of(v);
        for (uint32_t ei : at[static_cast<std::size_t>(v)])
            if ((edges[ei] & ~next) == 0) return false;
        return true;
    }
};

struct MaxSearch : IndependenceSearch {
    using IndependenceSearch::IndependenceSearch;
    int64_t best = 0;

    void seed() {
        uint64_t cur = 0;
        for (int v = n - 1; v >= 0; --v)
            if (can_add(cur, v)) cur |= bit_of(v);
        best = std::popcount(cur);
    }

    void dfs(int pos, uint64_t cur, uint64_t avail) {
        if (avail == 0 || pos < 0) {
            best = std::max<int64_t>(best, std::popcount(cur));
            return;
        }
        const int64_t ub =
            std::popcount(cur) + std::popcount(avail) - forced_exclusions(edges, cur, avail);
        if (ub <= best) return;
        const int v = pos;
        if (!(avail >> v & 1)) {
            dfs(pos - 1, cur, avail);
            return;
        }
        if (can_add(cur, v)) dfs(pos - 1, cur | bit_of(v), avail & ~bit_of(v));
        dfs(pos - 1, cur, avail & ~bit_of(v));
    }

    // Include-first over ascending vertices: the first completion of the
    // target size is the lexicographically-first maximum set.
    bool witness(int pos, uint64_t cur, int64_t target, uint64_t& out) const {
        if (std::popcount(cur) == target) {
            out = cur;
            return true;
        }
        if (pos == n) return false;
        const uint64_t avail = full_mask(n) & ~(bit_of(pos) - 1);
        if (std::popcount(cur) + std::popcount(avail) - forced_exclusions(edges, cur, avail) <
            target)
            return false;
        if (can_add(cur, pos) && witness(pos + 1, cur | bit_of(pos), target, out)) return true;
        return witness(pos + 1, cur, target, out);
    }
};

struct CountSearch : IndependenceSearch {
    using IndependenceSearch::IndependenceSearch;

    // `alive` edges satisfy e subset-of cur|avail and e & avail != 0. Once no
    // constraint is alive every subset of avail completes independently.
    BigInt count(uint64_t cur, uint64_t avail, const std::vector<uint64_t>& alive) const {
        if (alive.empty()) return BigInt(1) << std::popcount(avail);
        // Branch on the undecided vertex hitting the most alive edges.
        std::array<int, 64> hits{};
        for (uint64_t e : alive)
            for (uint64_t m = e & avail; m; m &= m - 1) ++hits[std::countr_zero(m)];
        int v = -1;
        for (uint64_t m = avail; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (v < 0 || hits[u] > hits[v]) v = u;
        }
        const uint64_t vb = bit_of(v);
        std::vector<uint64_t> child;
        child.reserve(alive.size());
        // Exclude v: edges through v can no longer be completed.
        for (uint64_t e : alive)
            if (!(e & vb)) child.push_back(e);
        BigInt total = count(cur, avail & ~vb, child);
        // Include v, unless that completes an edge.
        const uint64_t cur2 = cur | vb;
        bool legal = true;
        child.clear();
        for (uint64_t e : alive) {
            if ((e & ~cur2) == 0) {
                legal = false;
                break;
            }
            if (e & (avail & ~vb)) child.push_back(e);
        }
        if (legal) total += count(cur2, avail & ~vb, child);
        return total;
    }
};

struct MaximalSearch : IndependenceSearch {
    using IndependenceSearch::IndependenceSearch;
    std::vector<uint64_t> suffix;  // suffix[pos] = vertices at positions >= pos

    void prepare() {
        suffix.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int pos = n - 1; pos >= 0; --pos) suffix[pos] = suffix[pos + 1] | bit_of(pos);
    }

    // v was excluded: is there an edge whose other vertices are all included?
    bool justified(int v, uint64_t cur) const {
        const uint64_t allowed = cur | bit_of(v);
        for (uint32_t ei : at[static_cast<std::size_t>(v)])
            if ((edges[ei] & ~allowed) == 0) return true;
        return false;
    }

    // Could v still become justified if `future` vertices join cur?
    bool feasible(int v, uint64_t cur, uint64_t future) const {
        const uint64_t allowed = cur | future | bit_of(v);
        for (uint32_t ei : at[static_cast<std::size_t>(v)])
            if ((edges[ei] & ~allowed) == 0) return true;
        return false;
    }

    template <class Leaf>
    void go(int pos, uint64_t cur, uint64_t pending, Leaf&& leaf) const {
        const uint64_t future = suffix[static_cast<std::size_t>(pos)];
        for (uint64_t m = pending; m; m &= m - 1)
            if (!feasible(std::countr_zero(m), cur, future)) return;
        if (pos == n) {
            leaf(cur);
            return;
        }
        if (can_add(cur, pos)) {
            const uint64_t cur2 = cur | bit_of(pos);
            uint64_t pending2 = pending;
            for (uint64_t m = pending; m; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (justified(u, cur2)) pending2 &= ~bit_of(u);
            }
            go(pos + 1, cur2, pending2, leaf);
        }
        go(pos + 1, cur, pending | (justified(pos, cur) ? 0 : bit_of(pos)), leaf);
    }
};

}  // namespace

int64_t max_independent(int nbits, std::vector<uint64_t> edges) {
    MaxSearch s(nbits, std::move(edges));
    s.seed();
    s.dfs(nbits - 1, 0, full_mask(nbits));
    return s.best;
}

uint64_t max_independent_witness(int nbits, std::vector<uint64_t> edges, int64_t size) {
    MaxSearch s(nbits, std::move(edges));
    uint64_t out = 0;
    if (!s.witness(0, 0, size, out)) throw DomainError("no independent set of the requested size");
    return out;
}

BigInt count_independent(int nbits, std::vector<uint64_t> edges) {
    CountSearch s(nbits, std::move(edges));
    return s.count(0, full_mask(nbits), s.edges);
}

BigInt count_maximal_independent(int nbits, std::vector<uint64_t> edges) {
    MaximalSearch s(nbits, std::move(edges));
    s.prepare();
    BigInt total = 0;
    s.go(0, 0, 0, [&](uint64_t) { ++total; });
    return total;
}

void for_each_maximal_independent(int nbits, std::vector<uint64_t> edges,
                                  const std::function<void(uint64_t)>& sink) {
    MaximalSearch s(nbits, std::move(edges));
    s.prepare();
    s.go(0, 0, 0, sink);
}

int64_t max_matching(int64_t nvertices, std::vector<std::pair<int64_t, int64_t>> edges) {
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= nvertices || b < 0 || b >= nvertices)
            throw DomainError("matching edge endpoint outside the vertex range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Some maximum matching keeps every loop: a loop blocks only its own
    // vertex, and swapping a normal edge at that vertex for the loop frees the
    // other endpoint. Take them all, then drop edges through loop vertices.
    std::vector<char> blocked(static_cast<std::size_t>(nvertices), 0);
    int64_t result = 0;
    for (const auto& [a, b] : edges)
        if (a == b && !blocked[static_cast<std::size_t>(a)]) {
            blocked[static_cast<std::size_t>(a)] = 1;
            ++result;
        }
    std::vector<std::pair<int64_t, int64_t>> rest;
    for (const auto& [a, b] : edges)
        if (a != b && !blocked[static_cast<std::size_t>(a)] && !blocked[static_cast<std::size_t>(b)])
            rest.emplace_back(a, b);

    std::vector<std::vector<int64_t>> adj(static_cast<std::size_t>(nvertices));
    int64_t maxdeg = 0;
    for (const auto& [a, b] : rest) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (const auto& nb : adj) maxdeg = std::max<int64_t>(maxdeg, static_cast<int64_t>(nb.size()));

    if (maxdeg <= 2) {
        // Paths and cycles: a component on k vertices holds floor(k/2) edges.
        std::vector<char> seen(static_cast<std::size_t>(nvertices), 0);
        for (int64_t v = 0; v < nvertices; ++v) {
            if (seen[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)].empty())
                continue;
            int64_t size = 0;
            std::vector<int64_t> stack{v};
            seen[static_cast<std::size_t>(v)] = 1;
            while (!stack.empty()) {
                const int64_t u = stack.back();
                stack.pop_back();
                ++size;
                for (int64_t w : adj[static_cast<std::size_t>(u)])
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
            result += size / 2;
        }
        return result;
    }

    if (nvertices > 60) throw DomainError("dense matching fallback is limited to 60 vertices");
    // Exhaustive include/exclude over edges.
    const auto search = [&](auto&& self, std::size_t i, uint64_t used) -> int64_t {
        if (i == rest.size()) return 0;
        int64_t best = self(self, i + 1, used);
        const auto [a, b] = rest[i];
        const uint64_t need = bit_of(static_cast<int>(a)) | bit_of(static_cast<int>(b));
        if (!(used & need)) best = std::max(best, 1 + self(self, i + 1, used | need));
        return best;
    };
    return result + search(search, 0, 0);
}

}  // namespace lfree::detail
