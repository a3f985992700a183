#include "lfree/links.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lfree/detail/mask_search.hpp"
#include "lfree/errors.hpp"
#include "lfree/extremal.hpp"

namespace lfree {

Matching Matching::make(std::vector<std::pair<int64_t, int64_t>> pairs) {
    Matching m;
    std::set<int64_t> used;
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        if (a < 1) throw DomainError("matching vertices must be positive");
        if (!used.insert(a).second || (b != a && !used.insert(b).second))
            throw DomainError("matching edges must be vertex-disjoint");
        if (a == b) ++m.loop_count;
    }
    m.pairs = std::move(pairs);
    return m;
}

LinkHypergraph graph_GM(const CanonicalTriple& T, int64_t M) {
    if (!T.ordered) throw DomainError("G_M requires p >= q >= r");
    if (M < 1 || M % T.t != 0) throw DomainError("M must be a positive multiple of t");
    const BigInt rM = BigInt(T.r) * M;
    const int64_t top = to_int64(ceil_div(rM, BigInt(T.q))) - 1;
    LinkHypergraph H;
    H.vertices = IntegerSet::full(top);
    std::map<std::vector<int64_t>, Solution> edges;
    for (int64_t x = 1; BigInt(T.p) * x < rM; ++x) {
        const BigInt rest = rM - BigInt(T.p) * x;
        if (rest % T.q != 0) continue;
        const int64_t y = to_int64(rest / T.q);
        std::vector<int64_t> support{std::min(x, y), std::max(x, y)};
        if (support[0] == support[1]) support.pop_back();
        edges.try_emplace(std::move(support), Solution{x, y, M});
    }
    for (auto& [support, witness] : edges) {
        H.edges.push_back(support);
        H.witnesses.push_back(witness);
    }
    return H;
}

Matching gm1_matching(const CanonicalTriple& T, int64_t M) {
    const MatchingTerms terms = matching_count_terms(T, M);  // also validates T, M
    if (terms.total() == 0) return Matching{};
    const BigInt rM = BigInt(T.r) * M;
    const BigInt sum = BigInt(T.p) + T.q;

    // The unique x in [1, r2] with q | rM - p*x anchors the edge family
    // (x + a*r2, y - a*r1); consecutive a sweep all solutions.
    int64_t x0 = 0;
    for (int64_t x = 1; x <= T.r2; ++x)
        if ((rM - BigInt(T.p) * x) % T.q == 0) {
            x0 = x;
            break;
        }
    if (x0 == 0) throw Error("no anchor residue for the matching");
    const int64_t y0 = to_int64((rM - BigInt(T.p) * x0) / T.q);

    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (int64_t a = 0; a < terms.e1; ++a)
        pairs.emplace_back(checked_add(x0, checked_mul(a, T.r2)),
                           checked_sub(y0, checked_mul(a, T.r1)));

    if (terms.blocks > 0) {
        // First a whose smaller endpoint passes the crossing point rM/(p+q).
        const int64_t a0 =
            std::max<int64_t>(0, to_int64(floor_div(rM - x0 * sum, BigInt(T.r2) * sum)) + 1);
        const int64_t block_len = checked_mul(T.r1, T.r2);
        for (int64_t b = 0; b < terms.blocks; ++b) {
            int64_t kept = 0;
            for (int64_t i = 0; i < block_len; ++i) {
                const int64_t a = checked_add(a0, checked_add(checked_mul(b, block_len), i));
                const int64_t u = checked_add(x0, checked_mul(a, T.r2));
                const int64_t v = checked_sub(y0, checked_mul(a, T.r1));
                // Skip residues already met by the first run: u ≡ y0 (mod r1)
                // or v ≡ x0 (mod r2) would collide with one of its endpoints.
                if ((u - y0) % T.r1 == 0) continue;
                if ((v - x0) % T.r2 == 0) continue;
                pairs.emplace_back(u, v);
                ++kept;
            }
            if (kept != terms.per_block) throw Error("block kept the wrong number of edges");
        }
    }

    Matching m = Matching::make(std::move(pairs));
    if (m.size() != terms.total()) throw Error("matching size disagrees with its count formula");
    if (m.loop_count > 1) throw Error("matching grew more than one loop");
    const int64_t top = to_int64(ceil_div(rM, BigInt(T.q))) - 1;
    for (const auto& [u, v] : m.pairs) {
        if (u < 1 || v > top) throw Error("matching edge left the vertex range");
        if (BigInt(T.p) * u + BigInt(T.q) * v != rM && BigInt(T.p) * v + BigInt(T.q) * u != rM)
            throw Error("matching edge violates the equation");
    }
    return m;
}

LinkHypergraph link_hypergraph(const LinearEquation& eq, const IntegerSet& S,
                               const IntegerSet& B) {
    if (S.universe() != B.universe()) throw DomainError("S and B must share one universe");
    for (int64_t v : S.members())
        if (B.contains(v)) throw DomainError("S and B must be disjoint");
    LinkHypergraph H;
    H.vertices = B;
    std::map<std::vector<int64_t>, Solution> edges;
    for (const Solution& sol : enumerate_solutions(eq, S.universe())) {
        std::vector<int64_t> support;
        bool inside = true;
        for (int64_t v : sol) {
            if (B.contains(v))
                support.push_back(v);
            else if (!S.contains(v)) {
                inside = false;
                break;
            }
        }
        if (!inside || support.empty()) continue;
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        edges.try_emplace(std::move(support), sol);
    }
    for (auto& [support, witness] : edges) {
        H.edges.push_back(support);
        H.witnesses.push_back(witness);
    }
    return H;
}

namespace {

std::vector<uint64_t> edge_bit_masks(const LinkHypergraph& H, const std::vector<int64_t>& verts) {
    std::map<int64_t, int> bit;
    for (std::size_t i = 0; i < verts.size(); ++i) bit[verts[i]] = static_cast<int>(i);
    std::vector<uint64_t> masks;
    masks.reserve(H.edges.size());
    for (const auto& edge : H.edges) {
        uint64_t m = 0;
        for (int64_t v : edge) {
            const auto it = bit.find(v);
            if (it == bit.end()) throw DomainError("edge uses a value outside the vertex set");
            m |= uint64_t{1} << it->second;
        }
        masks.push_back(m);
    }
    return masks;
}

}  // namespace

MisResult mis_enumerate(const LinkHypergraph& H, MisMode mode) {
    const std::vector<int64_t> verts = H.vertices.members();
    if (verts.size() > 64)
        throw DomainError("maximal independent set enumeration is limited to 64 vertices");
    const std::vector<uint64_t> masks = edge_bit_masks(H, verts);
    const int nbits = static_cast<int>(verts.size());
    MisResult out;
    if (mode == MisMode::count) {
        out.count = detail::count_maximal_independent(nbits, masks);
        return out;
    }
    std::vector<uint64_t> found;
    detail::for_each_maximal_independent(nbits, masks, [&](uint64_t m) { found.push_back(m); });
    std::sort(found.begin(), found.end());
    out.count = static_cast<int64_t>(found.size());
    out.sets.reserve(found.size());
    for (uint64_t m : found) {
        IntegerSet s(H.vertices.universe());
        for (int i = 0; i < nbits; ++i)
            if (m >> i & 1) s.insert(verts[static_cast<std::size_t>(i)]);
        out.sets.push_back(std::move(s));
    }
    return out;
}

InducedInstance induced_matching_instance(int64_t q, int64_t r, int64_t n) {
    if (!(q > r && r >= 1)) throw DomainError("needs q > r >= 1");
    if (std::gcd(q, r) != 1) throw DomainError("needs gcd(q, r) = 1");
    if (n < 1) throw DomainError("n must be positive");
    const int64_t q2 = checked_mul(q, q);
    const int64_t M = checked_mul(q2, n / q2);
    if (M == 0) throw DomainError("n is below q^2, the gadget is empty");
    const int64_t W = to_int64(BigInt(r) * M / q);  // integral: q | M

    InducedInstance inst;
    inst.M = M;
    inst.W = W;
    inst.S = IntegerSet(n);
    inst.S.insert(M);
    inst.B = IntegerSet(n);
    for (int64_t v = 1; v <= n; ++v)
        if (v % q != 0) inst.B.insert(v);

    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (int64_t i = 1; 2 * i < W; ++i)
        if (i % q != 0) pairs.emplace_back(i, W - i);
    inst.matching = Matching::make(std::move(pairs));

    // Arithmetic sanity: pairs solve q*u + q*v = r*M inside the pool, and the
    // matched vertices admit no other link edge (u + v = W only for partners).
    std::map<int64_t, int64_t> partner;
    for (const auto& [u, v] : inst.matching.pairs) {
        if (checked_add(u, v) != W) throw Error("gadget pair misses the target sum");
        if (!inst.B.contains(u) || !inst.B.contains(v)) throw Error("gadget pair left the pool");
        partner[u] = v;
        partner[v] = u;
    }
    for (const auto& [u, mate] : partner) {
        const auto other = partner.find(W - u);
        if (other != partner.end() && W - u != mate) throw Error("gadget matching is not induced");
    }

    // Where feasible, verify against the actual link hypergraph: its edges
    // inside the span are exactly the matching, and the span has 2^|pairs|
    // maximal independent sets (one endpoint choice per pair). Larger spans
    // rely on the arithmetic checks above; the count identity there is forced
    // by disjointness of the pairs.
    const int64_t span_size = 2 * inst.matching.size();
    if (span_size <= 64 && n <= 512) {
        IntegerSet span(n);
        for (const auto& [u, v] : inst.matching.pairs) {
            span.insert(u);
            span.insert(v);
        }
        const LinearEquation eq = LinearEquation::make({q, q, -r}, 0);
        const LinkHypergraph link = link_hypergraph(eq, inst.S, inst.B);
        LinkHypergraph restricted;
        restricted.vertices = span;
        std::set<std::vector<int64_t>> seen;
        for (const auto& edge : link.edges) {
            if (std::all_of(edge.begin(), edge.end(), [&](int64_t v) { return span.contains(v); }))
                seen.insert(edge);
        }
        std::set<std::vector<int64_t>> expected;
        for (const auto& [u, v] : inst.matching.pairs) expected.insert({u, v});
        if (seen != expected) throw Error("span edges are not exactly the matching");
        for (const auto& edge : seen) {
            restricted.edges.push_back(edge);
            restricted.witnesses.push_back({edge[0], edge[1], M});
        }
        const MisResult mis = mis_enumerate(restricted, MisMode::count);
        if (mis.count != BigInt(1) << inst.matching.size())
            throw Error("span maximal independent set count is off");
    }

    const int64_t exponent = fmax_lower_exponent(q, r, n);
    if (inst.matching.size() < exponent)
        throw Error("gadget matching fell below the exponent formula");
    return inst;
}

}  // namespace lfree
