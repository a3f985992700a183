#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "lfree/equation.hpp"
#include "lfree/numeric.hpp"
#include "lfree/oracle.hpp"
#include "lfree/solutions.hpp"

using namespace lfree;

TEST_CASE("largest progression-free subsets of [1..10]") {
    const LinearEquation ap = parse_equation("x+y=2z");
    const std::vector<int64_t> expected{1, 2, 2, 3, 4, 4, 4, 4, 5, 5};
    for (int64_t n = 1; n <= 10; ++n) CHECK(brute_mu(ap, n).value == expected[n - 1]);
}

TEST_CASE("free and maximal-free counts for x+y=z at tiny n") {
    const LinearEquation eq = parse_equation("x+y=z");
    CHECK(brute_counts(eq, 3, CountKind::free_sets) == 6);
    CHECK(brute_counts(eq, 3, CountKind::maximal_sets) == 2);
    CHECK(brute_counts(eq, 4, CountKind::free_sets) == 9);
    CHECK(brute_counts(eq, 4, CountKind::maximal_sets) == 4);
    CHECK(brute_counts(eq, 0, CountKind::free_sets) == 1);  // the empty set
}

TEST_CASE("four-variable equations work: Sidon sets") {
    const LinearEquation sidon = parse_equation("x+y=z+w");
    CHECK(brute_mu(sidon, 3).value == 2);
    CHECK(brute_mu(sidon, 8).value == 4);
}

TEST_CASE("witnesses are the lexicographically first optima") {
    const BruteMu odd = brute_mu(parse_equation("x+y=z"), 10, true);
    REQUIRE(odd.witness.has_value());
    CHECK(odd.witness->members() == std::vector<int64_t>{1, 3, 5, 7, 9});
    CHECK(odd.witness->size() == odd.value);

    const BruteMu ap = brute_mu(parse_equation("x+y=2z"), 8, true);
    REQUIRE(ap.witness.has_value());
    CHECK(ap.witness->members() == std::vector<int64_t>{1, 2, 4, 5});

    CHECK_FALSE(brute_mu(parse_equation("x+y=z"), 10).witness.has_value());
}

TEST_CASE("witnesses are actually free") {
    for (const char* text : {"x+y=z", "x+y=2z", "3x+2y=2z"})
        for (int64_t n : {5, 9, 14}) {
            const LinearEquation eq = parse_equation(text);
            const BruteMu res = brute_mu(eq, n, true);
            REQUIRE(res.witness.has_value());
            CHECK(is_free(eq, *res.witness));
            CHECK(res.witness->size() == res.value);
        }
}

TEST_CASE("mu grows by at most one per step") {
    for (const char* text : {"x+y=z", "3x+2y=2z", "x+y=2z"}) {
        const LinearEquation eq = parse_equation(text);
        int64_t prev = 0;
        for (int64_t n = 1; n <= 22; ++n) {
            const int64_t cur = brute_mu(eq, n).value;
            CHECK(cur >= prev);
            CHECK(cur <= prev + 1);
            prev = cur;
        }
    }
}

TEST_CASE("counts dominate: 2^mu <= f and f_max <= f") {
    for (const char* text : {"x+y=z", "x+y=2z"})
        for (int64_t n : {6, 10, 14}) {
            const LinearEquation eq = parse_equation(text);
            const BigInt f = brute_counts(eq, n, CountKind::free_sets);
            const BigInt fmax = brute_counts(eq, n, CountKind::maximal_sets);
            CHECK(big_pow(2, brute_mu(eq, n).value) <= f);
            CHECK(fmax <= f);
            CHECK(fmax >= 1);
        }
}

TEST_CASE("elements in no nontrivial solution") {
    const LinearEquation eq = parse_equation("x+y=z");
    CHECK(brute_mu_star(eq, 1) == 1);   // no solutions inside [1]
    CHECK(brute_mu_star(eq, 10) == 0);  // every element appears in some sum

    // For x+y=2z within [4]: (1,3,2) and (2,4,3) cover 1,2,3,4.
    CHECK(brute_mu_star(parse_equation("x+y=2z"), 2) == 2);
    CHECK(brute_mu_star(parse_equation("x+y=2z"), 4) == 0);
}

TEST_CASE("caps gate the exhaustive searches") {
    const LinearEquation eq = parse_equation("x+y=z");
    OracleCaps caps;
    caps.mu = 10;
    caps.count_free = 10;
    caps.count_maximal = 10;
    CHECK_THROWS_AS(brute_mu(eq, 11, false, caps), CapError);
    CHECK_THROWS_AS(brute_counts(eq, 11, CountKind::free_sets, caps), CapError);
    CHECK_THROWS_AS(brute_counts(eq, 11, CountKind::maximal_sets, caps), CapError);
    CHECK(brute_mu(eq, 10, false, caps).value == 5);
    CHECK_THROWS_WITH_AS(brute_mu(eq, 11, false, caps),
                         "exhaustive mu is capped at n = 10 (raise LFREE_CAP_N to override)",
                         CapError);
}

TEST_CASE("maximum matching oracle on graph-shaped hypergraphs") {
    LinkHypergraph empty;
    CHECK(brute_max_matching(empty) == 0);

    LinkHypergraph triangle;
    triangle.vertices = IntegerSet::of(3, {1, 2, 3});
    triangle.edges = {{1, 2}, {1, 3}, {2, 3}};
    CHECK(brute_max_matching(triangle) == 1);

    LinkHypergraph with_loop;
    with_loop.vertices = IntegerSet::of(4, {1, 2, 3, 4});
    with_loop.edges = {{1}, {2, 3}, {3, 4}};
    CHECK(brute_max_matching(with_loop) == 2);  // loop at 1 plus one of the pairs

    LinkHypergraph hyper;
    hyper.vertices = IntegerSet::of(3, {1, 2, 3});
    hyper.edges = {{1, 2, 3}};
    CHECK_THROWS_AS(brute_max_matching(hyper), DomainError);
}

TEST_CASE("path and cycle matchings hit floor(k/2)") {
    LinkHypergraph path;  // 1-2-3-4-5
    path.vertices = IntegerSet::of(5, {1, 2, 3, 4, 5});
    path.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CHECK(brute_max_matching(path) == 2);

    LinkHypergraph cycle;  // 6-cycle
    cycle.vertices = IntegerSet::of(6, {1, 2, 3, 4, 5, 6});
    cycle.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}};
    CHECK(brute_max_matching(cycle) == 3);
}
