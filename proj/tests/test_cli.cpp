#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lfree/cli_core.hpp"

using namespace lfree;
using nlohmann::json;

namespace {

json out_json(const CommandResult& r) { return json::parse(r.out); }

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream file(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("matching golden document, byte for byte") {
    const CommandResult r = exec_command({"matching", "--eq", "x+y=z", "--M", "10"});
    CHECK(r.exit_code == 0);
    CHECK(r.out
          == "{\"command\":\"matching\",\"equation\":\"x+y=z\",\"inputs\":{\"M\":10},"
             "\"outputs\":{\"loops\":1,\"pairs\":[[1,9],[2,8],[3,7],[4,6],[5,5]],\"size\":5}}\n");
}

TEST_CASE("identical inputs give byte-identical outputs") {
    const CommandResult a = exec_command({"mu", "--eq", "x+y=z", "--n", "12"});
    const CommandResult b = exec_command({"mu", "--eq", "x+y=z", "--n", "12"});
    CHECK(a.out == b.out);
}

TEST_CASE("mu reports formula, case, brute, and agreement") {
    const CommandResult r =
        exec_command({"mu", "--eq", "x+y=z", "--n", "10", "--method", "both"});
    CHECK(r.exit_code == 0);
    const json outputs = out_json(r).at("outputs");
    CHECK(outputs.at("formula") == 5);
    CHECK(outputs.at("case") == "ii");
    CHECK(outputs.at("brute") == 5);
    CHECK(outputs.at("agree") == true);

    const json brute_only =
        out_json(exec_command({"mu", "--eq", "x+y=2z", "--n", "9", "--method", "brute"}));
    CHECK(brute_only.at("outputs") == json{{"brute", 5}});

    // Multivariable equations echo in general form and may carry an interval.
    const json multi = out_json(exec_command({"mu", "--eq", "x+y+z=w", "--n", "12"}));
    CHECK(multi.at("equation") == "x+y+z-w=0");
    CHECK(multi.at("outputs").at("formula") == 8);
}

TEST_CASE("bounds reports rates as exact strings") {
    const CommandResult r = exec_command({"bounds", "--eq", "2x+2y=z"});
    CHECK(r.exit_code == 0);
    const json outputs = out_json(r).at("outputs");
    CHECK(outputs.at("C") == "1/2");
    CHECK(outputs.at("rate") == "1/4");
    CHECK(outputs.at("best") == "MainT1");
    CHECK(outputs.at("case") == "ii(a)");
    CHECK(outputs.at("lower_rate") == "1/4");

    const json at_n = out_json(exec_command({"bounds", "--eq", "3x+3y=2z", "--n", "30"}));
    CHECK(at_n.at("outputs").at("mu_n") == 20);
    CHECK(at_n.at("outputs").at("mu_star_n") == 7);
    CHECK(at_n.at("outputs").at("case") == "i(c)");
    CHECK(at_n.at("outputs").at("lower_rate") == "2/9");
}

TEST_CASE("count and extremal subcommands") {
    const json count =
        out_json(exec_command({"count", "--eq", "x+y=z", "--n", "4", "--what", "maximal"}));
    CHECK(count.at("outputs").at("count") == "4");

    const json in_set =
        out_json(exec_command({"extremal", "--eq", "2x+y=z", "--n", "10", "--set", "In"}));
    CHECK(in_set.at("outputs").at("size") == 7);
    CHECK(in_set.at("outputs").at("members") == json::array({4, 5, 6, 7, 8, 9, 10}));

    const json an_set =
        out_json(exec_command({"extremal", "--eq", "3x+2y=2z", "--n", "10", "--set", "An"}));
    CHECK(an_set.at("outputs").at("members") == json::array({1, 3, 5, 7, 8, 9, 10}));
}

TEST_CASE("csv format flattens the document into two rows") {
    const CommandResult r =
        exec_command({"matching", "--eq", "x+y=z", "--M", "10", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out
          == "command,equation,M,loops,pairs,size\n"
             "matching,x+y=z,10,1,\"[[1,9],[2,8],[3,7],[4,6],[5,5]]\",5\n");
}

TEST_CASE("verify subcommand embeds the report") {
    const CommandResult r = exec_command({"verify", "--suite", "mu4", "--grid", "n=1..5"});
    CHECK(r.exit_code == 0);
    const json doc = out_json(r);
    CHECK(doc.at("inputs").at("suite") == "mu4");
    CHECK(doc.at("outputs").at("ok") == true);
    CHECK(doc.at("outputs").at("passed") == 25);
}

TEST_CASE("domain errors exit 1") {
    const CommandResult no_case =
        exec_command({"mu", "--eq", "5x+3y=z", "--n", "10", "--method", "formula"});
    CHECK(no_case.exit_code == 1);
    CHECK(no_case.out.empty());
    CHECK(no_case.err.find("no formula case applies") != std::string::npos);

    CHECK(exec_command({"matching", "--eq", "3x+3y=2z", "--M", "7"}).exit_code == 1);
    CHECK(exec_command({"verify", "--suite", "nope"}).exit_code == 1);

    const CommandResult capped =
        exec_command({"count", "--eq", "x+y=z", "--n", "40", "--what", "maximal"});
    CHECK(capped.exit_code == 1);
    CHECK(capped.err.find("LFREE_CAP_N") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(exec_command({"mu", "--eq", "x+y=z", "--n", "10", "--badflag"}).exit_code == 2);
    CHECK(exec_command({"mu", "--eq", "x+y=z"}).exit_code == 2);           // missing --n
    CHECK(exec_command({}).exit_code == 2);                                // no subcommand
    CHECK(exec_command({"mu", "--eq", "x+y=z", "--n", "5", "--method", "magic"}).exit_code == 2);

    const CommandResult bad_eq = exec_command({"mu", "--eq", "x+*y=z", "--n", "5"});
    CHECK(bad_eq.exit_code == 2);
    CHECK(bad_eq.err.find("(at position 2)") != std::string::npos);

    const CommandResult bad_grid =
        exec_command({"verify", "--suite", "mu4", "--grid", "n=1.."});
    CHECK(bad_grid.exit_code == 2);
    CHECK(bad_grid.err.find("(at position") != std::string::npos);
}

TEST_CASE("help exits zero") {
    const CommandResult r = exec_command({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mu") != std::string::npos);
}

TEST_CASE("timing goes to stderr, never stdout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"mu", "--eq", "x+y=z", "--n", "8"}, {"mu", "--eq", "x+y=z"}}) {
        const CommandResult r = exec_command(args);
        CHECK(r.err.find("timing_ms=") != std::string::npos);
        CHECK(r.out.find("timing_ms=") == std::string::npos);
    }
}

TEST_CASE("scan writes the grid CSV with a fixed header") {
    const std::string path = "scan_test_out.csv";
    const CommandResult r = exec_command(
        {"scan", "--p-max", "4", "--q-max", "4", "--r-max", "4", "--n", "10,20", "--out", path});
    CHECK(r.exit_code == 0);
    CHECK(out_json(r).at("outputs").at("rows") == 30);

    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 31);
    CHECK(lines[0]
          == "p,q,r,n,In_size,Tn_size,brute_mu,formula_mu,flag_extremal_gap,fmax,"
             "log2_fmax_over_n,q19_rate,upper_rate,status");
    CHECK(lines[1].substr(0, 8) == "1,1,1,10");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 13);
    std::remove(path.c_str());
}

TEST_CASE("scan flags brute optima beating both constructions") {
    const std::string path = "scan_flag_out.csv";
    CHECK(exec_command({"scan", "--p-max", "3", "--q-max", "2", "--r-max", "2", "--n", "15",
                        "--out", path})
              .exit_code == 0);
    bool flagged = false, unflagged = false;
    for (const auto& line : read_lines(path)) {
        if (line.substr(0, 7) == "3,2,2,1") flagged = line.find(",true,") != std::string::npos;
        if (line.substr(0, 7) == "1,1,1,1") unflagged = line.find(",false,") != std::string::npos;
    }
    CHECK(flagged);
    CHECK(unflagged);
    std::remove(path.c_str());
}

TEST_CASE("scan rejects bad arguments") {
    CHECK(exec_command({"scan", "--p-max", "0", "--q-max", "1", "--r-max", "1", "--n", "5",
                        "--out", "x.csv"})
              .exit_code == 1);
    CHECK(exec_command({"scan", "--p-max", "1", "--q-max", "1", "--r-max", "1", "--n", "0",
                        "--out", "x.csv"})
              .exit_code == 1);
}
