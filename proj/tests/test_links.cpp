#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "doctest.h"
#include "lfree/equation.hpp"
#include "lfree/extremal.hpp"
#include "lfree/links.hpp"
#include "lfree/oracle.hpp"

using namespace lfree;

namespace {
CanonicalTriple trip(int64_t p, int64_t q, int64_t r) { return CanonicalTriple::make(p, q, r); }
}  // namespace

TEST_CASE("G_M lists the solutions of px+qy=rM below the threshold") {
    const LinkHypergraph G = graph_GM(trip(2, 1, 1), 7);
    CHECK(G.vertices == IntegerSet::full(6));
    CHECK(G.edges == std::vector<std::vector<int64_t>>{{1, 3}, {1, 5}, {2, 3}});
    REQUIRE(G.witnesses.size() == 3);
    for (const Solution& w : G.witnesses) CHECK(2 * w[0] + w[1] == 7);
    CHECK(G.witnesses[0] == Solution{3, 1, 7});
    CHECK(G.witnesses[1] == Solution{1, 5, 7});
    CHECK(G.witnesses[2] == Solution{2, 3, 7});
}

TEST_CASE("G_M loops are singleton edges") {
    const LinkHypergraph G = graph_GM(trip(1, 1, 1), 10);
    CHECK(G.edges
          == std::vector<std::vector<int64_t>>{{1, 9}, {2, 8}, {3, 7}, {4, 6}, {5}});
    CHECK(graph_GM(trip(1, 1, 1), 1).edges.empty());
}

TEST_CASE("G_M vertices have degree at most two") {
    for (int64_t p = 1; p <= 5; ++p)
        for (int64_t q = 1; q <= p; ++q)
            for (int64_t r = 1; r <= q; ++r) {
                const CanonicalTriple T = trip(p, q, r);
                if (T.p != p) continue;  // skip non-reduced triples
                for (int64_t M = T.t; M <= 60; M += T.t) {
                    std::map<int64_t, int> degree;
                    for (const auto& e : graph_GM(T, M).edges)
                        for (int64_t v : e) ++degree[v];
                    for (const auto& [v, d] : degree) CHECK(d <= 2);
                }
            }
}

TEST_CASE("Matching::make normalizes, counts loops, rejects overlaps") {
    const Matching m = Matching::make({{9, 1}, {5, 5}, {2, 8}});
    CHECK(m.pairs == std::vector<std::pair<int64_t, int64_t>>{{1, 9}, {5, 5}, {2, 8}});
    CHECK(m.loop_count == 1);
    CHECK(m.size() == 3);
    CHECK_THROWS_AS(Matching::make({{1, 2}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(Matching::make({{4, 4}, {4, 4}}), DomainError);
    CHECK(Matching::make({}).size() == 0);
}

TEST_CASE("explicit matching golden values") {
    const Matching a = gm1_matching(trip(1, 1, 1), 10);
    CHECK(a.pairs
          == std::vector<std::pair<int64_t, int64_t>>{{1, 9}, {2, 8}, {3, 7}, {4, 6}, {5, 5}});
    CHECK(a.loop_count == 1);

    const Matching b = gm1_matching(trip(3, 2, 1), 30);
    CHECK(b.pairs == std::vector<std::pair<int64_t, int64_t>>{{2, 12}, {4, 9}, {6, 6}});
    CHECK(b.loop_count == 1);

    const Matching c = gm1_matching(trip(63, 42, 41), 21);
    CHECK(c.size() == 4);
    CHECK(c.loop_count == 0);

    CHECK(gm1_matching(trip(1, 1, 1), 2).pairs
          == std::vector<std::pair<int64_t, int64_t>>{{1, 1}});
    CHECK(gm1_matching(trip(1, 1, 1), 1).size() == 0);
    CHECK_THROWS_AS(gm1_matching(trip(3, 3, 2), 7), DomainError);  // t does not divide M
    CHECK_THROWS_AS(gm1_matching(trip(1, 1, 1), 0), DomainError);
}

TEST_CASE("explicit matching attains the counting formula and fits in G_M") {
    for (auto [p, q, r] : std::vector<std::array<int64_t, 3>>{
             {1, 1, 1}, {2, 1, 1}, {3, 2, 1}, {3, 3, 2}, {5, 4, 3}, {7, 5, 2}}) {
        const CanonicalTriple T = trip(p, q, r);
        for (int64_t M = T.t; M <= 90; M += T.t) {
            const Matching m = gm1_matching(T, M);
            CHECK(m.size() == matching_count_terms(T, M).total());
            CHECK(brute_max_matching(graph_GM(T, M)) >= m.size());
            for (const auto& [x, y] : m.pairs)
                CHECK((T.p * x + T.q * y == T.r * M || T.p * y + T.q * x == T.r * M));
        }
    }
}

TEST_CASE("link hypergraph collects B-supports of solutions inside the pool") {
    const LinearEquation eq = parse_equation("x+y=z");
    const IntegerSet S = IntegerSet::of(5, {5});
    const IntegerSet B = IntegerSet::of(5, {1, 2, 3});
    const LinkHypergraph L = link_hypergraph(eq, S, B);
    CHECK(L.vertices == B);
    CHECK(L.edges == std::vector<std::vector<int64_t>>{{1, 2}, {1, 2, 3}, {2, 3}});
    CHECK(L.witnesses
          == std::vector<Solution>{{1, 1, 2}, {1, 2, 3}, {2, 3, 5}});
}

TEST_CASE("independence in the link matches freeness of the extension") {
    const LinearEquation eq = parse_equation("x+y=z");
    const int64_t n = 9;
    const IntegerSet S = IntegerSet::of(n, {7, 9});
    REQUIRE(is_free(eq, S));
    IntegerSet B(n);
    for (int64_t v = 1; v <= n; ++v)
        if (!S.contains(v)) B.insert(v);
    const LinkHypergraph L = link_hypergraph(eq, S, B);

    for (uint64_t x_mask = 0; x_mask < (uint64_t{1} << 7); ++x_mask) {
        // Spread the 7 pool bits onto B's actual members.
        IntegerSet X(n), merged = S;
        int bit = 0;
        for (int64_t v : B.members()) {
            if (x_mask >> bit & 1) {
                X.insert(v);
                merged.insert(v);
            }
            ++bit;
        }
        bool independent = true;
        for (const auto& e : L.edges) {
            bool inside = true;
            for (int64_t v : e) inside = inside && X.contains(v);
            independent = independent && !inside;
        }
        CHECK(independent == is_free(eq, merged));
    }
}

TEST_CASE("solutions entirely inside S leave no edge") {
    const LinearEquation eq = parse_equation("x+y=z");
    const IntegerSet S = IntegerSet::of(6, {1, 2, 3});  // 1+2=3 inside S
    const IntegerSet B = IntegerSet::of(6, {6});
    const LinkHypergraph L = link_hypergraph(eq, S, B);
    for (const auto& e : L.edges) {
        bool touches_b = false;
        for (int64_t v : e) touches_b = touches_b || B.contains(v);
        CHECK(touches_b);
    }
}

TEST_CASE("maximal independent sets of small hypergraphs") {
    LinkHypergraph H;
    H.vertices = IntegerSet::of(3, {1, 2, 3});
    H.edges = {{1, 2}, {2, 3}};
    const MisResult both = mis_enumerate(H, MisMode::list);
    CHECK(both.count == 2);
    REQUIRE(both.sets.size() == 2);
    CHECK(both.sets[0].members() == std::vector<int64_t>{2});
    CHECK(both.sets[1].members() == std::vector<int64_t>{1, 3});

    // A loop at 2 forbids vertex 2 entirely.
    LinkHypergraph loop;
    loop.vertices = IntegerSet::of(3, {1, 2, 3});
    loop.edges = {{2}};
    const MisResult only = mis_enumerate(loop, MisMode::list);
    CHECK(only.count == 1);
    CHECK(only.sets[0].members() == std::vector<int64_t>{1, 3});

    // No edges: the whole vertex set is the single MIS.
    LinkHypergraph free_graph;
    free_graph.vertices = IntegerSet::of(5, {1, 4, 5});
    free_graph.edges = {};
    const MisResult all = mis_enumerate(free_graph, MisMode::count);
    CHECK(all.count == 1);
    CHECK(all.sets.empty());  // count mode keeps no sets
}

TEST_CASE("mis_enumerate agrees with the counting oracle") {
    const LinearEquation eq = parse_equation("x+y=z");
    for (int64_t n : {5, 8, 11}) {
        const SolutionHypergraph H = solution_hypergraph(eq, n);
        LinkHypergraph L;
        L.vertices = IntegerSet::full(n);
        L.edges = H.edges;
        CHECK(mis_enumerate(L, MisMode::count).count
              == brute_counts(eq, n, CountKind::maximal_sets));
    }
}

TEST_CASE("induced matching instances") {
    const InducedInstance inst = induced_matching_instance(2, 1, 20);
    CHECK(inst.M == 20);
    CHECK(inst.W == 10);
    CHECK(inst.S.members() == std::vector<int64_t>{20});
    CHECK(inst.matching.pairs == std::vector<std::pair<int64_t, int64_t>>{{1, 9}, {3, 7}});
    CHECK(inst.matching.loop_count == 0);
    for (int64_t v = 1; v <= 20; ++v) CHECK(inst.B.contains(v) == (v % 2 == 1));

    const InducedInstance big = induced_matching_instance(3, 2, 30);
    CHECK(big.M == 27);
    CHECK(big.W == 18);
    CHECK(big.matching.size() == 6);
    CHECK(big.matching.size() >= fmax_lower_exponent(3, 2, 30));

    CHECK_THROWS_AS(induced_matching_instance(2, 1, 3), DomainError);   // M would be 0
    CHECK_THROWS_AS(induced_matching_instance(2, 2, 20), DomainError);  // gcd != 1
}

TEST_CASE("the induced matching spans 2^edges maximal independent sets") {
    const InducedInstance inst = induced_matching_instance(2, 1, 20);
    const LinearEquation eq = LinearEquation::make({2, 2, -1}, 0);
    IntegerSet span(inst.B.universe());
    for (const auto& [u, v] : inst.matching.pairs) {
        span.insert(u);
        span.insert(v);
    }
    const LinkHypergraph L = link_hypergraph(eq, inst.S, span);
    CHECK(mis_enumerate(L, MisMode::count).count == big_pow(2, inst.matching.size()));
}

TEST_CASE("mis_enumerate refuses universes past 64") {
    LinkHypergraph H;
    H.vertices = IntegerSet::full(70);
    CHECK_THROWS_AS(mis_enumerate(H, MisMode::count), DomainError);
}
