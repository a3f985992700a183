#include "lfree/cli_core.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfree/equation.hpp"
#include "lfree/errors.hpp"
#include "lfree/extremal.hpp"
#include "lfree/links.hpp"
#include "lfree/verify.hpp"

namespace lfree {

namespace {

using nlohmann::json;

// Echo the equation as a canonical triple when it reduces to one, otherwise
// in the general canonical form.
std::string equation_echo(const LinearEquation& eq) {
    try {
        return canonical_triple(eq).text();
    } catch (const DomainError&) {
        return print_equation(eq);
    }
}

json make_doc(const std::string& command, const std::optional<std::string>& equation, json inputs,
              json outputs) {
    json doc{{"command", command}, {"inputs", std::move(inputs)}, {"outputs", std::move(outputs)}};
    if (equation) doc["equation"] = *equation;
    return doc;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();  // exact integers; arrays/objects as compact JSON
}

std::string doc_to_csv(const json& doc) {
    std::vector<std::string> headers{"command"};
    std::vector<std::string> values{doc.at("command").get<std::string>()};
    if (doc.contains("equation")) {
        headers.emplace_back("equation");
        values.push_back(doc.at("equation").get<std::string>());
    }
    for (const char* section : {"inputs", "outputs"})
        for (const auto& [key, value] : doc.at(section).items()) {
            headers.push_back(key);
            values.push_back(csv_scalar(value));
        }
    std::string out;
    for (std::size_t i = 0; i < headers.size(); ++i)
        out += csv_quote(headers[i]) + (i + 1 < headers.size() ? "," : "\n");
    for (std::size_t i = 0; i < values.size(); ++i)
        out += csv_quote(values[i]) + (i + 1 < values.size() ? "," : "\n");
    return out;
}

json run_mu(const std::string& eq_text, int64_t n, const std::string& method,
            const OracleCaps& caps) {
    const LinearEquation eq = parse_equation(eq_text);
    json outputs = json::object();
    std::optional<CanonicalTriple> triple;
    try {
        triple = canonical_triple(eq);
    } catch (const DomainError&) {
    }
    int64_t lo = 0, hi = -1;  // formula bracket when computed
    if (method != "brute") {
        if (triple) {
            const auto value = mu_formula(*triple, n);
            if (!value) throw DomainError("no formula case applies to " + triple->text());
            outputs["formula"] = value->value;
            outputs["case"] = value->case_label;
            lo = hi = value->value;
        } else {
            const auto value = mu_formula_multivar(eq, n);
            if (!value) throw DomainError("no formula case applies to " + print_equation(eq));
            outputs["case"] = value->case_label;
            if (value->exact())
                outputs["formula"] = value->lo;
            else {
                outputs["formula_lo"] = value->lo;
                outputs["formula_hi"] = value->hi;
            }
            lo = value->lo;
            hi = value->hi;
        }
    }
    if (method != "formula") {
        const int64_t brute = brute_mu(eq, n, false, caps).value;
        outputs["brute"] = brute;
        if (method == "both") outputs["agree"] = lo <= brute && brute <= hi;
    }
    return make_doc("mu", equation_echo(eq), json{{"method", method}, {"n", n}},
                    std::move(outputs));
}

json run_count(const std::string& eq_text, int64_t n, const std::string& what,
               const OracleCaps& caps) {
    const LinearEquation eq = parse_equation(eq_text);
    const CountKind kind = what == "free" ? CountKind::free_sets : CountKind::maximal_sets;
    const BigInt count = brute_counts(eq, n, kind, caps);
    return make_doc("count", equation_echo(eq), json{{"n", n}, {"what", what}},
                    json{{"count", count.str()}});
}

json run_extremal(const std::string& eq_text, int64_t n, const std::string& which) {
    const LinearEquation eq = parse_equation(eq_text);
    IntegerSet s(0);
    if (which == "An") {
        s = hybrid_An(n);
    } else {
        const CanonicalTriple T = canonical_triple(eq);
        s = which == "In" ? interval_In(T, n) : residue_Tn(T, n);
    }
    return make_doc("extremal", equation_echo(eq), json{{"n", n}, {"set", which}},
                    json{{"members", json(s.members())}, {"size", s.size()}});
}

json run_matching(const std::string& eq_text, int64_t M) {
    const CanonicalTriple T = canonical_triple(parse_equation(eq_text));
    const Matching m = gm1_matching(T, M);
    json pairs = json::array();
    for (const auto& [u, v] : m.pairs) pairs.push_back(json::array({u, v}));
    return make_doc(
        "matching", T.text(), json{{"M", M}},
        json{{"loops", m.loop_count}, {"pairs", std::move(pairs)}, {"size", m.size()}});
}

json run_bounds(const std::string& eq_text, const std::optional<int64_t>& n) {
    const CanonicalTriple T = canonical_triple(parse_equation(eq_text));
    const BoundReport report = best_bound(T);
    const UpperRate up = fmax_upper_rate(T);
    json applicable = json::array();
    for (const BoundEntry& entry : report.applicable)
        applicable.push_back(json{{"name", entry.name}, {"rate", entry.rate.str()}});
    json outputs{{"C", rational_to_string(up.C)},
                 {"rate", up.rate.str()},
                 {"applicable", std::move(applicable)},
                 {"best", report.best},
                 {"best_rate", report.best_rate.str()},
                 {"case", report.case_label},
                 {"lower_rate", report.lower_rate
                                    ? json(rational_to_string(*report.lower_rate))
                                    : json(nullptr)}};
    json inputs = json::object();
    if (n) {
        inputs["n"] = *n;
        const auto mu = mu_formula(T, *n);
        outputs["mu_n"] = mu ? json(mu->value) : json(nullptr);
        outputs["mu_star_n"] = mu_star(T, *n, MuStarMode::exact_set);
    }
    return make_doc("bounds", T.text(), std::move(inputs), std::move(outputs));
}

json run_verify(const std::string& suite, const std::string& grid_text, const OracleCaps& caps,
                int& exit_code) {
    const GridSpec grid = grid_text.empty() ? GridSpec{} : GridSpec::parse(grid_text);
    const VerifyReport report = verify_suite(suite, grid, caps);
    exit_code = report.ok() ? 0 : 1;
    return make_doc("verify", std::nullopt, json{{"grid", grid_text}, {"suite", suite}},
                    to_json(report));
}

json run_scan(int64_t p_max, int64_t q_max, int64_t r_max, const std::vector<int64_t>& n_list,
              const std::string& out_path, const OracleCaps& caps) {
    const int64_t rows = scan_grid(p_max, q_max, r_max, n_list, out_path, caps);
    return make_doc("scan", std::nullopt,
                    json{{"n_list", json(n_list)},
                         {"out", out_path},
                         {"p_max", p_max},
                         {"q_max", q_max},
                         {"r_max", r_max}},
                    json{{"rows", rows}});
}

}  // namespace

CommandResult exec_command(const std::vector<std::string>& argv) {
    CommandResult result;
    const auto started = std::chrono::steady_clock::now();

    CLI::App app{"solution-free set toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    std::string eq_text, method = "both", what, set_name, suite, grid_text, out_path;
    int64_t n = 0, M = 0, p_max = 0, q_max = 0, r_max = 0;
    int64_t bounds_n_value = 0;
    std::vector<int64_t> n_list;

    CLI::App* mu = app.add_subcommand("mu", "largest free subset of [n]");
    mu->add_option("--eq", eq_text, "equation text")->required();
    mu->add_option("--n", n, "interval bound")->required();
    mu->add_option("--method", method, "formula, brute, or both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));

    CLI::App* count = app.add_subcommand("count", "number of free or maximal free subsets");
    count->add_option("--eq", eq_text, "equation text")->required();
    count->add_option("--n", n, "interval bound")->required();
    count->add_option("--what", what, "free or maximal")
        ->required()
        ->check(CLI::IsMember({"free", "maximal"}));

    CLI::App* extremal = app.add_subcommand("extremal", "candidate extremal constructions");
    extremal->add_option("--eq", eq_text, "equation text")->required();
    extremal->add_option("--n", n, "interval bound")->required();
    extremal->add_option("--set", set_name, "In, Tn, or An")
        ->required()
        ->check(CLI::IsMember({"In", "Tn", "An"}));

    CLI::App* matching = app.add_subcommand("matching", "explicit matching in G_M");
    matching->add_option("--eq", eq_text, "equation text")->required();
    matching->add_option("--M", M, "anchor element")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "exponent rates and the best bound");
    bounds->add_option("--eq", eq_text, "equation text")->required();
    CLI::Option* bounds_n = bounds->add_option("--n", bounds_n_value, "also evaluate at n");

    CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--grid", grid_text, "grid overrides");

    CLI::App* scan = app.add_subcommand("scan", "write the exploration grid as CSV");
    scan->add_option("--p-max", p_max, "largest p")->required();
    scan->add_option("--q-max", q_max, "largest q")->required();
    scan->add_option("--r-max", r_max, "largest r")->required();
    scan->add_option("--n", n_list, "n values")->required()->delimiter(',');
    scan->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
        const OracleCaps caps = OracleCaps::from_env();
        json doc;
        int code = 0;
        if (mu->parsed())
            doc = run_mu(eq_text, n, method, caps);
        else if (count->parsed())
            doc = run_count(eq_text, n, what, caps);
        else if (extremal->parsed())
            doc = run_extremal(eq_text, n, set_name);
        else if (matching->parsed())
            doc = run_matching(eq_text, M);
        else if (bounds->parsed())
            doc = run_bounds(eq_text, bounds_n->count() ? std::optional<int64_t>(bounds_n_value)
                                                        : std::nullopt);
        else if (verify->parsed())
            doc = run_verify(suite, grid_text, caps, code);
        else
            doc = run_scan(p_max, q_max, r_max, n_list, out_path, caps);
        result.out = format == "csv" ? doc_to_csv(doc) : doc.dump() + "\n";
        result.exit_code = code;
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const ParseError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
    } catch (const std::exception& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    result.err += "timing_ms=" + std::to_string(elapsed.count()) + "\n";
    return result;
}

int64_t scan_grid(int64_t p_max, int64_t q_max, int64_t r_max, const std::vector<int64_t>& n_list,
                  const std::string& out_path, const OracleCaps& caps) {
    if (p_max < 1 || q_max < 1 || r_max < 1) throw DomainError("grid maxima must be >= 1");
    for (int64_t n : n_list)
        if (n < 1) throw DomainError("n values must be >= 1");
    std::ofstream file(out_path);
    if (!file) throw DomainError("cannot open '" + out_path + "' for writing");
    file << "p,q,r,n,In_size,Tn_size,brute_mu,formula_mu,flag_extremal_gap,"
            "fmax,log2_fmax_over_n,q19_rate,upper_rate,status\n";
    int64_t rows = 0;
    for (int64_t p = 1; p <= p_max; ++p)
        for (int64_t q = 1; q <= std::min(q_max, p); ++q)
            for (int64_t r = 1; r <= std::min(r_max, q); ++r) {
                if (std::gcd(std::gcd(p, q), r) != 1) continue;
                const CanonicalTriple T = CanonicalTriple::make(p, q, r);
                for (int64_t n : n_list) {
                    const int64_t in_size = interval_In(T, n).size();
                    const int64_t tn_size = residue_Tn(T, n).size();
                    bool skipped = false;
                    std::string mu_txt, flag_txt, fmax_txt, log2_txt;
                    try {
                        const int64_t mu = brute_mu(T.equation(), n, false, caps).value;
                        mu_txt = std::to_string(mu);
                        flag_txt = mu > std::max(in_size, tn_size) ? "true" : "false";
                    } catch (const CapError&) {
                        skipped = true;
                    }
                    if (p == q && !skipped) {
                        try {
                            const BigInt fmax =
                                brute_counts(T.equation(), n, CountKind::maximal_sets, caps);
                            fmax_txt = fmax.str();
                            char buf[32];
                            std::snprintf(buf, sizeof buf, "%.6f",
                                          std::log2(fmax.convert_to<double>()) /
                                              static_cast<double>(n));
                            log2_txt = buf;
                        } catch (const CapError&) {
                            skipped = true;
                        }
                    }
                    const auto formula = mu_formula(T, n);
                    const Rational conjectured(T.r * (T.q - 1), 2 * T.q * T.q);
                    file << p << ',' << q << ',' << r << ',' << n << ',' << in_size << ','
                         << tn_size << ',' << mu_txt << ','
                         << (formula ? std::to_string(formula->value) : "") << ',' << flag_txt
                         << ',' << fmax_txt << ',' << log2_txt << ','
                         << rational_to_string(conjectured) << ',' << fmax_upper_rate(T).rate.str()
                         << ',' << (skipped ? "skip" : "ok") << '\n';
                    ++rows;
                }
            }
    if (!file.good()) throw DomainError("failed writing '" + out_path + "'");
    return rows;
}

}  // namespace lfree
