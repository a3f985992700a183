#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lfree/oracle.hpp"

namespace lfree {

// Grid mini-language: comma-separated items; an item containing '=' starts a
// clause `name=<item>`, bare items extend the previous clause's list. Each
// item is an integer, a range `lo..hi`, or the name of an earlier variable;
// range endpoints may also be earlier variable names. Example:
// "p=1..8,q=1..p,r=1..q,n=5,10,20".
struct GridSpec {
    using Bound = std::variant<int64_t, std::string>;
    struct Item {
        Bound lo, hi;  // single values have lo == hi
    };
    struct Clause {
        std::string name;
        std::vector<Item> items;
    };
    std::vector<Clause> clauses;

    static GridSpec parse(const std::string& text);  // ParseError with position

    bool has(const std::string& name) const;
    // Same-named clauses of `other` replace clauses here; new ones append.
    GridSpec overridden_by(const GridSpec& other) const;
    std::string str() const;
};

// Every assignment of the grid variables, nested in declaration order (last
// clause varies fastest); endpoints naming earlier variables are resolved
// against the partial assignment. Throws DomainError on unknown names or when
// the grid exceeds one million assignments.
std::vector<std::map<std::string, int64_t>> expand_grid(const GridSpec& spec);

struct VerifyCell {
    std::string key;
    std::string outcome;  // "pass" | "fail" | "skip"
    std::string note;
    nlohmann::json witness;  // small payload: sizes, counterexample, ...
};

struct VerifyReport {
    std::string suite;
    std::string grid;  // the merged grid actually used
    std::vector<VerifyCell> cells;
    int64_t passed = 0, failed = 0, skipped = 0;

    bool ok() const { return failed == 0; }
};

nlohmann::json to_json(const VerifyReport& report);

std::vector<std::string> verify_suite_names();

// Runs one invariant battery over the suite's default grid merged with
// `grid`. Cells run in parallel on a small thread pool and are reported in
// deterministic key order; CapError in a cell records a skip, any other
// failure records a fail. Unknown suite names throw DomainError.
VerifyReport verify_suite(const std::string& name, const GridSpec& grid = {},
                          const OracleCaps& caps = OracleCaps::from_env());

}  // namespace lfree
