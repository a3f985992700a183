#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lfree/equation.hpp"

using namespace lfree;

TEST_CASE("parsing moves right-hand variables left and constants right") {
    CHECK(parse_equation("x+y=z") == LinearEquation::make({1, 1, -1}, 0));
    CHECK(parse_equation("3x+2y=2z") == LinearEquation::make({3, 2, -2}, 0));
    CHECK(parse_equation("3*x+2*y=z") == LinearEquation::make({3, 2, -1}, 0));
    CHECK(parse_equation("x + y = 10") == LinearEquation::make({1, 1}, 10));
    CHECK(parse_equation("2x - 3 = y") == LinearEquation::make({2, -1}, 3));
    CHECK(parse_equation("2z=x+y") == LinearEquation::make({2, -1, -1}, 0));
    CHECK(parse_equation("x+y=z+w") == LinearEquation::make({1, 1, -1, -1}, 0));
    CHECK(parse_equation("-x-y+z=0") == LinearEquation::make({-1, -1, 1}, 0));
}

TEST_CASE("parse errors carry the offending position") {
    CHECK_THROWS_WITH_AS(parse_equation("x++y=z"), "expected a variable name (at position 2)",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_equation("x+y"), "expected '=' (at position 3)", ParseError);
    CHECK_THROWS_AS(parse_equation("x=x"), ParseError);   // coefficients cancel
    CHECK_THROWS_AS(parse_equation("x=5"), ParseError);   // one variable only
    CHECK_THROWS_AS(parse_equation(""), ParseError);
}

TEST_CASE("print_equation round-trips through the parser") {
    for (const char* text : {"x+y=z", "3x+2y=2z", "x + y = 10", "x+y=z+w", "2x - 3 = y"}) {
        const LinearEquation eq = parse_equation(text);
        CHECK(parse_equation(print_equation(eq)) == eq);
    }
    CHECK(print_equation(parse_equation("x+y=2z")) == "x+y-2z=0");
    CHECK(print_equation(parse_equation("x + y = 10")) == "x+y=10");
}

TEST_CASE("classification of homogeneity and translation invariance") {
    CHECK(classify(parse_equation("x+y=z")).homogeneous);
    CHECK_FALSE(classify(parse_equation("x+y=z")).translation_invariant);
    CHECK(classify(parse_equation("x+y=2z")).translation_invariant);
    CHECK(classify(parse_equation("x+y=z+w")).translation_invariant);
    CHECK_FALSE(classify(parse_equation("x+y=10")).homogeneous);
}

TEST_CASE("trivial solutions group equal values into zero-sum classes") {
    const LinearEquation sidon = parse_equation("x+y=z+w");
    CHECK(is_trivial_solution(sidon, {2, 3, 3, 2}));
    CHECK(is_trivial_solution(sidon, {1, 2, 1, 2}));
    CHECK(is_trivial_solution(sidon, {1, 2, 2, 1}));
    CHECK_FALSE(is_trivial_solution(sidon, {1, 3, 2, 2}));

    const LinearEquation ap = parse_equation("x+y=2z");
    CHECK(is_trivial_solution(ap, {2, 2, 2}));
    CHECK_FALSE(is_trivial_solution(ap, {1, 3, 2}));

    // Non-translation-invariant equations admit no trivial solutions at all.
    CHECK_FALSE(is_trivial_solution(parse_equation("x+y=z"), {1, 1, 2}));
    CHECK_FALSE(is_trivial_solution(parse_equation("x+y=z"), {2, 2, 4}));

    CHECK_THROWS_AS(is_trivial_solution(ap, {1, 3}), DomainError);        // wrong arity
    CHECK_THROWS_AS(is_trivial_solution(ap, {1, 3, 3}), DomainError);     // not a solution
    CHECK_THROWS_AS(is_trivial_solution(ap, {0, 0, 0}), DomainError);     // entries < 1
}

TEST_CASE("canonical triples order p >= q and divide out the gcd") {
    const CanonicalTriple T = CanonicalTriple::make(42, 63, 41);
    CHECK(T.p == 63);
    CHECK(T.q == 42);
    CHECK(T.r == 41);
    CHECK(T.t == 21);
    CHECK(T.r1 == 3);
    CHECK(T.r2 == 2);
    CHECK(T.ordered);
    CHECK(T.text() == "63x+42y=41z");

    CHECK(CanonicalTriple::make(2, 4, 2) == CanonicalTriple::make(2, 1, 1));
    CHECK(CanonicalTriple::make(1, 1, 1).text() == "x+y=z");
    CHECK(CanonicalTriple::make(2, 1, 1).text() == "2x+y=z");
    CHECK_FALSE(CanonicalTriple::make(1, 1, 3).ordered);

    CHECK(CanonicalTriple::make(1, 1, 1).equation() == LinearEquation::make({1, 1, -1}, 0));
}

TEST_CASE("canonical_triple reduces three-variable homogeneous equations") {
    CHECK(canonical_triple(parse_equation("x+y=z")) == CanonicalTriple::make(1, 1, 1));
    CHECK(canonical_triple(parse_equation("3x+2y=2z")) == CanonicalTriple::make(3, 2, 2));
    CHECK(canonical_triple(parse_equation("-x-y+z=0")) == CanonicalTriple::make(1, 1, 1));
    CHECK(canonical_triple(parse_equation("2z=x+y")) == CanonicalTriple::make(1, 1, 2));

    CHECK_THROWS_AS(canonical_triple(parse_equation("x+y=10")), DomainError);
    CHECK_THROWS_AS(canonical_triple(parse_equation("x+y=z+w")), DomainError);
    CHECK_THROWS_AS(canonical_triple(LinearEquation::make({1, 1, 1}, 0)), DomainError);
}

TEST_CASE("collapse_variables identifies two variables in place") {
    const LinearEquation eq = parse_equation("x+y+z=w");
    CHECK(collapse_variables(eq, 1, 2) == LinearEquation::make({2, 1, -1}, 0));
    CHECK(collapse_variables(eq, 2, 3) == LinearEquation::make({1, 2, -1}, 0));

    LinearEquation chain = parse_equation("x+y+z+w=2v");
    chain = collapse_variables(chain, 1, 2);
    CHECK(chain == LinearEquation::make({2, 1, 1, -2}, 0));
    chain = collapse_variables(chain, 1, 2);
    CHECK(chain == LinearEquation::make({3, 1, -2}, 0));
}

TEST_CASE("collapse_variables rejects bad indices and vanishing sums") {
    const LinearEquation eq = parse_equation("x+y+z=w");
    CHECK_THROWS_AS(collapse_variables(eq, 3, 4), DomainError);  // 1 + (-1) vanishes
    CHECK_THROWS_AS(collapse_variables(eq, 2, 2), DomainError);
    CHECK_THROWS_AS(collapse_variables(eq, 0, 2), DomainError);
    CHECK_THROWS_AS(collapse_variables(eq, 1, 5), DomainError);
    CHECK_THROWS_AS(collapse_variables(parse_equation("x+y=10"), 1, 2), DomainError);
}

TEST_CASE("partition_to_triple sums coefficient groups into an ordered triple") {
    const LinearEquation eq = parse_equation("x+y+z=w");
    CHECK(partition_to_triple(eq, {1, 2}, {3}, {4}) == CanonicalTriple::make(2, 1, 1));

    const LinearEquation five = parse_equation("x+y+z+w=2v");
    CHECK(partition_to_triple(five, {1, 2}, {3, 4}, {5}) == CanonicalTriple::make(1, 1, 1));

    CHECK_THROWS_AS(partition_to_triple(eq, {1}, {2}, {3, 4}), DomainError);   // r' = 0
    CHECK_THROWS_AS(partition_to_triple(eq, {3}, {1, 2}, {4}), DomainError);   // p' < q'
    CHECK_THROWS_AS(partition_to_triple(eq, {1, 2}, {3}, {3}), DomainError);   // overlap
    CHECK_THROWS_AS(partition_to_triple(eq, {1}, {2}, {4}), DomainError);      // misses z
    CHECK_THROWS_AS(partition_to_triple(parse_equation("x+y=10"), {1}, {2}, {2}), DomainError);
}
