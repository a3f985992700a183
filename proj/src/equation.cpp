#include "lfree/equation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace lfree {

LinearEquation LinearEquation::make(std::vector<int64_t> coeffs, int64_t rhs) {
    if (coeffs.size() < 2) throw DomainError("equation needs at least two variables");
    for (int64_t a : coeffs)
        if (a == 0) throw DomainError("zero coefficient is not allowed");
    return LinearEquation{std::move(coeffs), rhs};
}

CanonicalTriple CanonicalTriple::make(int64_t p, int64_t q, int64_t r) {
    if (p <= 0 || q <= 0 || r <= 0) throw DomainError("triple entries must be positive");
    if (p < q) std::swap(p, q);
    const int64_t g = std::gcd(std::gcd(p, q), r);
    p /= g;
    q /= g;
    r /= g;
    CanonicalTriple out;
    out.p = p;
    out.q = q;
    out.r = r;
    out.t = std::gcd(p, q);
    out.r1 = p / out.t;
    out.r2 = q / out.t;
    out.ordered = q >= r;
    return out;
}

LinearEquation CanonicalTriple::equation() const {
    return LinearEquation::make({p, q, checked_neg(r)}, 0);
}

std::string CanonicalTriple::text() const {
    auto term = [](int64_t c, const char* name) {
        return c == 1 ? std::string(name) : std::to_string(c) + name;
    };
    return term(p, "x") + "+" + term(q, "y") + "=" + term(r, "z");
}

namespace {

// --- recursive-descent parser -----------------------------------------------
//
//   equation := side '=' side
//   side     := ['+'|'-'] term (('+'|'-') term)*
//   term     := integer ['*'] identifier | identifier | integer
//
// Whitespace is allowed anywhere between tokens.
struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    std::map<std::string, std::size_t> index_of;  // name -> variable slot
    std::vector<int64_t> coeffs;                  // per slot, in first-appearance order
    BigInt constant = 0;                          // accumulated constants, left side positive

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    int64_t parse_integer() {
        skip_ws();
        const std::size_t start = pos;
        BigInt value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) fail("expected an integer");
        if (value > INT64_MAX) {
            pos = start;
            fail("integer literal overflows 64 bits");
        }
        return static_cast<int64_t>(value);
    }

    std::string parse_identifier() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected a variable name");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    void add_variable(const std::string& name, int64_t coeff) {
        auto [it, fresh] = index_of.try_emplace(name, coeffs.size());
        if (fresh)
            coeffs.push_back(coeff);
        else
            coeffs[it->second] = checked_add(coeffs[it->second], coeff);
    }

    // side_sign is +1 for the left side, -1 for the right side.
    void parse_term(int side_sign, int term_sign) {
        skip_ws();
        if (pos >= text.size()) fail("expected a term");
        const int64_t sign = side_sign * term_sign;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const int64_t value = parse_integer();
            skip_ws();
            bool has_var = false;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                has_var = true;
            } else if (pos < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                has_var = true;
            }
            if (has_var) {
                add_variable(parse_identifier(), checked_mul(sign, value));
            } else {
                constant += BigInt(sign) * value;
            }
        } else {
            add_variable(parse_identifier(), sign);
        }
    }

    void parse_side(int side_sign) {
        skip_ws();
        int term_sign = 1;
        if (peek_is('+')) {
            ++pos;
        } else if (peek_is('-')) {
            ++pos;
            term_sign = -1;
        }
        parse_term(side_sign, term_sign);
        while (true) {
            skip_ws();
            if (pos >= text.size()) return;
            if (text[pos] == '+') {
                ++pos;
                parse_term(side_sign, 1);
            } else if (text[pos] == '-') {
                ++pos;
                parse_term(side_sign, -1);
            } else {
                return;
            }
        }
    }

    LinearEquation run() {
        parse_side(+1);
        skip_ws();
        if (pos >= text.size() || text[pos] != '=') fail("expected '='");
        ++pos;
        parse_side(-1);
        skip_ws();
        if (pos < text.size()) fail("unexpected trailing input");

        if (coeffs.empty()) throw ParseError("equation has no variables", 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] == 0)
                throw ParseError("combined coefficient of variable " + std::to_string(i + 1) +
                                     " is zero",
                                 0);
        // Constants move to the right-hand side.
        const BigInt rhs = -constant;
        if (coeffs.size() < 2) throw ParseError("equation needs at least two variables", 0);
        return LinearEquation::make(std::move(coeffs), to_int64(rhs));
    }
};

std::string variable_name(std::size_t idx, std::size_t arity) {
    static const char* small[] = {"x", "y", "z", "w"};
    if (arity <= 4) return small[idx];
    return "x" + std::to_string(idx + 1);
}

}  // namespace

LinearEquation parse_equation(const std::string& text) { return Parser(text).run(); }

std::string print_equation(const LinearEquation& eq) {
    std::string out;
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
        const int64_t a = eq.coeffs[i];
        if (i == 0) {
            if (a < 0) out += '-';
        } else {
            out += a < 0 ? '-' : '+';
        }
        const BigInt mag = boost::multiprecision::abs(BigInt(a));
        if (mag != 1) out += mag.str();
        out += variable_name(i, eq.coeffs.size());
    }
    out += '=';
    out += std::to_string(eq.rhs);
    return out;
}

Classification classify(const LinearEquation& eq) {
    Classification c;
    c.homogeneous = eq.rhs == 0;
    BigInt sum = 0;
    for (int64_t a : eq.coeffs) sum += a;
    c.translation_invariant = c.homogeneous && sum == 0;
    return c;
}

bool is_trivial_solution(const LinearEquation& eq, const std::vector<int64_t>& x) {
    if (x.size() != eq.arity()) throw DomainError("tuple arity does not match the equation");
    BigInt lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1) throw DomainError("tuple entries must be positive");
        lhs += BigInt(eq.coeffs[i]) * x[i];
    }
    if (lhs != eq.rhs) throw DomainError("tuple does not satisfy the equation");

    if (!classify(eq).translation_invariant) return false;
    std::map<int64_t, BigInt> group_sum;  // value -> coefficient sum of its indices
    for (std::size_t i = 0; i < x.size(); ++i) group_sum[x[i]] += eq.coeffs[i];
    for (const auto& [value, sum] : group_sum)
        if (sum != 0) return false;
    return true;
}

CanonicalTriple canonical_triple(const LinearEquation& eq) {
    if (eq.rhs != 0) throw DomainError("triple form needs a homogeneous equation");
    if (eq.arity() != 3) throw DomainError("triple form needs exactly three variables");
    int positives = 0;
    for (int64_t a : eq.coeffs) positives += a > 0;
    if (positives == 0 || positives == 3)
        throw DomainError("equation has no solutions over positive integers");
    // Normalize to two positive coefficients and one negative.
    std::vector<int64_t> c = eq.coeffs;
    if (positives == 1)
        for (int64_t& a : c) a = checked_neg(a);
    std::vector<int64_t> pq;
    int64_t r = 0;
    for (int64_t a : c) {
        if (a > 0)
            pq.push_back(a);
        else
            r = checked_neg(a);
    }
    return CanonicalTriple::make(pq[0], pq[1], r);
}

LinearEquation collapse_variables(const LinearEquation& eq, std::size_t i, std::size_t j) {
    const std::size_t k = eq.arity();
    if (i == j || i < 1 || j < 1 || i > k || j > k) throw DomainError("bad variable indices");
    const std::size_t lo = std::min(i, j) - 1, hi = std::max(i, j) - 1;
    std::vector<int64_t> c = eq.coeffs;
    const int64_t merged = checked_add(c[lo], c[hi]);
    if (merged == 0) throw DomainError("combined coefficient vanishes");
    c[lo] = merged;
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(hi));
    return LinearEquation::make(std::move(c), eq.rhs);
}

CanonicalTriple partition_to_triple(const LinearEquation& eq,
                                    const std::vector<std::size_t>& part1,
                                    const std::vector<std::size_t>& part2,
                                    const std::vector<std::size_t>& part3) {
    if (eq.rhs != 0) throw DomainError("partition form needs a homogeneous equation");
    const std::size_t k = eq.arity();
    std::set<std::size_t> seen;
    auto sum_part = [&](const std::vector<std::size_t>& part) {
        if (part.empty()) throw DomainError("partition parts must be non-empty");
        BigInt s = 0;
        for (std::size_t idx : part) {
            if (idx < 1 || idx > k) throw DomainError("partition index out of range");
            if (!seen.insert(idx).second) throw DomainError("partition parts must be disjoint");
            s += eq.coeffs[idx - 1];
        }
        return s;
    };
    const BigInt p = sum_part(part1);
    const BigInt q = sum_part(part2);
    const BigInt r = -sum_part(part3);
    if (seen.size() != k) throw DomainError("partition must cover all variables");
    if (!(p >= q && q >= r && r >= 1))
        throw DomainError("partition sums must satisfy p' >= q' >= r' >= 1");
    return CanonicalTriple::make(to_int64(p), to_int64(q), to_int64(r));
}

}  // namespace lfree
