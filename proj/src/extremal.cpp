#include "lfree/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "lfree/errors.hpp"

namespace lfree {

namespace {

void require_ordered(const CanonicalTriple& T, const char* who) {
    if (!T.ordered) throw DomainError(std::string(who) + " requires p >= q >= r");
}

void require_bound(int64_t n) {
    if (n < 0) throw DomainError("n must be nonnegative");
}

int64_t ceil_frac(const BigInt& num, const BigInt& den) { return to_int64(ceil_div(num, den)); }

}  // namespace

IntegerSet interval_In(const CanonicalTriple& T, int64_t n) {
    require_bound(n);
    const int64_t a = n % T.t;
    const int64_t lo = to_int64(floor_div(BigInt(T.r) * (n - a), BigInt(T.p) + T.q)) + 1;
    IntegerSet s(n);
    for (int64_t v = std::max<int64_t>(lo, 1); v <= n; ++v) s.insert(v);
    return s;
}

IntegerSet residue_Tn(const CanonicalTriple& T, int64_t n) {
    require_bound(n);
    IntegerSet s(n);
    for (int64_t v = 1; v <= n; ++v)
        if (v % T.t != 0) s.insert(v);
    return s;
}

IntegerSet hybrid_An(int64_t n) {
    require_bound(n);
    IntegerSet s(n);
    for (int64_t v = 1; v <= n; ++v)
        if (v % 2 != 0 || 3 * v > 2 * n) s.insert(v);
    return s;
}

int64_t mu_case_i(const CanonicalTriple& T, int64_t n) {
    return ceil_frac(BigInt(T.q - 1) * n, T.q);
}

int64_t mu_case_ii(const CanonicalTriple& T, int64_t n) {
    const int64_t a = n % T.q;
    return ceil_frac((BigInt(T.p) + T.q - T.r) * (n - a), BigInt(T.p) + T.q) + a;
}

int64_t mu_case_iii(const CanonicalTriple& T, int64_t n) {
    return ceil_frac(BigInt(T.t - 1) * n, T.t);
}

bool mu_case_iii_condition(const CanonicalTriple& T) {
    const BigInt D = BigInt(T.r1) * T.r1 + BigInt(T.r1 - 1) * (T.r2 - 1);
    const BigInt lhs = BigInt(T.r) * D;
    const BigInt rhs =
        (BigInt(T.r1) * T.r2 - T.r1 - T.r2 + 4) * T.r2 * ((BigInt(T.r1) + 1) * D + (T.r2 - 1));
    return lhs > rhs;
}

std::optional<MuValue> mu_formula(const CanonicalTriple& T, int64_t n) {
    require_ordered(T, "closed-form mu");
    require_bound(n);
    if (T.p % T.q == 0) {
        const BigInt sum = BigInt(T.p) + T.q;
        const BigInt rq = BigInt(T.r) * T.q;
        if (sum <= rq) return MuValue{mu_case_i(T, n), "i"};
        return MuValue{mu_case_ii(T, n), "ii"};
    }
    if (T.t > 1 && mu_case_iii_condition(T)) return MuValue{mu_case_iii(T, n), "iii"};
    return std::nullopt;
}

std::optional<MultivarMu> mu_formula_multivar(const LinearEquation& eq, int64_t n) {
    if (!classify(eq).homogeneous)
        throw DomainError("multivariable closed forms apply to homogeneous equations only");
    require_bound(n);

    std::optional<MultivarMu> exact_i, exact_iii, best_ii;
    const auto consider = [&](const std::vector<int64_t>& coeffs) {
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            (coeffs[i] > 0 ? pos : neg).push_back(i);
        if (pos.size() < 2 || neg.empty()) return;
        int64_t r_primed = 0;
        for (std::size_t i : neg) r_primed = checked_sub(r_primed, coeffs[i]);
        const std::size_t m = neg.size();
        // Every split of the positive side into two non-empty groups.
        for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << pos.size()); ++mask) {
            int64_t p_primed = 0, q_primed = 0;
            std::vector<int64_t> a_group, b_group;
            for (std::size_t j = 0; j < pos.size(); ++j) {
                const int64_t c = coeffs[pos[j]];
                if (mask >> j & 1) {
                    p_primed = checked_add(p_primed, c);
                    a_group.push_back(c);
                } else {
                    q_primed = checked_add(q_primed, c);
                    b_group.push_back(c);
                }
            }
            if (!(p_primed >= q_primed && q_primed >= r_primed)) continue;
            const CanonicalTriple trip = CanonicalTriple::make(p_primed, q_primed, r_primed);
            const int64_t t_primed = std::gcd(std::gcd(p_primed, q_primed), r_primed);
            const BigInt sum = BigInt(trip.p) + trip.q;
            const BigInt rq = BigInt(trip.r) * trip.q;
            const bool q_divides = trip.p % trip.q == 0;
            if (m == 1 && b_group.size() == 1 && sum <= rq &&
                std::all_of(a_group.begin(), a_group.end(),
                            [&](int64_t c) { return c % q_primed == 0; })) {
                const int64_t v = mu_case_i(trip, n);
                if (!exact_i) exact_i = MultivarMu{v, v, "i"};
            }
            if (!q_divides && m == 1 && trip.t > 1 && mu_case_iii_condition(trip)) {
                const int64_t tt = checked_mul(trip.t, t_primed);
                const auto div = [&](int64_t c) { return c % tt == 0; };
                if (std::all_of(a_group.begin(), a_group.end(), div) &&
                    std::all_of(b_group.begin(), b_group.end(), div)) {
                    const int64_t v = mu_case_iii(trip, n);
                    if (!exact_iii) exact_iii = MultivarMu{v, v, "iii"};
                }
            }
            if (q_divides && sum >= rq) {
                const int64_t lo = ceil_frac((sum - trip.r) * n, sum);
                const int64_t hi = mu_case_ii(trip, n);
                if (!best_ii || hi - lo < best_ii->hi - best_ii->lo)
                    best_ii = MultivarMu{lo, hi, "ii"};
            }
        }
    };

    consider(eq.coeffs);
    std::vector<int64_t> negated;
    negated.reserve(eq.coeffs.size());
    for (int64_t c : eq.coeffs) negated.push_back(checked_neg(c));
    consider(negated);

    if (exact_i) return exact_i;
    if (exact_iii) return exact_iii;
    return best_ii;
}

MatchingTerms matching_count_terms(const CanonicalTriple& T, int64_t M) {
    require_ordered(T, "matching-size formula");
    if (M < 1 || M % T.t != 0) throw DomainError("M must be a positive multiple of t");
    const BigInt rM = BigInt(T.r) * M;
    const BigInt sum = BigInt(T.p) + T.q;
    MatchingTerms terms;
    terms.e1 = to_int64(floor_div(rM, BigInt(T.r2) * sum));
    terms.per_block = to_int64(BigInt(T.r1) * T.r2 - T.r1 - T.r2 + 1);
    // floor(rM/(r1(p+q)) - 1/r2) over the common denominator r1*r2*(p+q); the
    // result can be negative for tiny M, where the construction is empty.
    const BigInt inner = floor_div(rM * T.r2 - BigInt(T.r1) * sum, BigInt(T.r1) * T.r2 * sum);
    terms.blocks = std::max<int64_t>(0, to_int64(floor_div(inner, BigInt(T.r1) * T.r2)));
    return terms;
}

int64_t small_elements_bound(const CanonicalTriple& T, int64_t M) {
    const MatchingTerms terms = matching_count_terms(T, M);
    return to_int64(ceil_div(BigInt(T.r) * M, BigInt(T.q)) - 1 - terms.total());
}

int64_t small_elements_bound(const CanonicalTriple& T, int64_t M, int64_t n) {
    if (M > n) throw DomainError("M must lie in [n]");
    const MatchingTerms terms = matching_count_terms(T, M);
    return to_int64(BigInt(M) - terms.total() + ceil_div(BigInt(n - M) * (T.t - 1), BigInt(T.t)));
}

namespace {

// Smallest partner w >= 1 making coeff_own*s + coeff_other*w divisible by r,
// together with the resulting z; nullopt when no residue works. w ranges over
// a class mod r/gcd(coeff_other, r), and z grows with w, so the minimal w
// decides whether any solution fits in [n].
std::optional<std::pair<int64_t, int64_t>> summand_role_min(int64_t coeff_own,
                                                            int64_t coeff_other, int64_t r,
                                                            int64_t s) {
    const int64_t period = r / std::gcd(coeff_other, r);
    for (int64_t w = 1; w <= period; ++w) {
        const BigInt left = BigInt(coeff_own) * s + BigInt(coeff_other) * w;
        if (left % r == 0) return std::pair{w, to_int64(left / r)};
    }
    return std::nullopt;
}

bool lies_in_solution(const CanonicalTriple& T, int64_t s, int64_t n) {
    // z slot: px+qy = rs needs rs-p-q to be a sum of nonnegative multiples of
    // p and q; both unknowns then automatically stay in [n] since r <= q <= p.
    if (s % T.t == 0) {
        const BigInt need = BigInt(T.r) * s - T.p - T.q;
        if (need >= 0) {
            const BigInt reduced = need / T.t;  // exact: t | rs and t | p+q
            for (BigInt a = 0; a * T.r1 <= reduced && a < T.r2; ++a)
                if ((reduced - a * T.r1) % T.r2 == 0) return true;
        }
    }
    // x slot and y slot: the partner w >= 1 and the resulting z must fit.
    for (const auto& [own, other] : {std::pair{T.p, T.q}, std::pair{T.q, T.p}}) {
        const auto hit = summand_role_min(own, other, T.r, s);
        if (hit && hit->first <= n && hit->second <= n) return true;
    }
    return false;
}

}  // namespace

int64_t mu_star(const CanonicalTriple& T, int64_t n, MuStarMode mode) {
    require_ordered(T, "mu-star");
    require_bound(n);
    if (mode == MuStarMode::formula) {
        const BigInt threshold = floor_div(BigInt(T.r) * n - T.p, BigInt(T.q));
        return to_int64(ceil_div((BigInt(n) - threshold) * (T.t - 1), BigInt(T.t)));
    }
    int64_t count = 0;
    for (int64_t s = 1; s <= n; ++s)
        if (!lies_in_solution(T, s, n)) ++count;
    return count;
}

namespace {

UpperRate upper_rate_from(int64_t p, int64_t q, int64_t r, int64_t t) {
    const BigInt num = BigInt(t) * (BigInt(p) * p + BigInt(p - t) * (q - t));
    const BigInt den = BigInt(p) * p * (BigInt(p) + q);
    const Rational C = Rational(1) - Rational(num, den);
    if (!(Rational(1, 2) <= C && C <= Rational(1) - Rational(t, p + q)))
        throw Error("container constant escaped [1/2, 1-t/(p+q)]");
    return UpperRate{C, RateExpr::linear(C * Rational(r, q))};
}

}  // namespace

UpperRate fmax_upper_rate(const CanonicalTriple& T) {
    require_ordered(T, "container rate");
    return upper_rate_from(T.p, T.q, T.r, T.t);
}

UpperRate fmax_upper_rate_multivar(const LinearEquation& eq) {
    if (!classify(eq).homogeneous)
        throw DomainError("container rate applies to homogeneous equations only");
    std::vector<int64_t> coeffs = eq.coeffs;
    int64_t positives = 0;
    for (int64_t c : coeffs)
        if (c > 0) ++positives;
    if (positives == 1 && coeffs.back() > 0)
        for (int64_t& c : coeffs) c = checked_neg(c);
    const std::size_t k = coeffs.size() - 1;
    if (k < 2) throw DomainError("need at least two left-hand variables");
    if (coeffs.back() >= 0) throw DomainError("the right-hand variable must come last");
    const int64_t r = -coeffs.back();
    int64_t all_gcd = r, left_gcd = 0, p = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs[i] <= 0) throw DomainError("left-hand coefficients must be positive");
        if (i + 1 < k) {
            if (coeffs[i] < coeffs[i + 1])
                throw DomainError("left-hand coefficients must be nonincreasing");
            p = checked_add(p, coeffs[i]);
        }
        all_gcd = std::gcd(all_gcd, coeffs[i]);
        left_gcd = std::gcd(left_gcd, coeffs[i]);
    }
    const int64_t q = coeffs[k - 1];
    if (q < r) throw DomainError("the smallest left coefficient must be >= r");
    if (all_gcd != 1) throw DomainError("coefficients must have gcd 1");
    const int64_t t = std::gcd(p, q);
    if (t != left_gcd)
        throw DomainError("gcd(p,q) must equal the gcd of the left-hand coefficients");
    return upper_rate_from(p, q, r, t);
}

int64_t fmax_lower_exponent(int64_t q, int64_t r, int64_t n) {
    if (!(q > r && r >= 1)) throw DomainError("needs q > r >= 1");
    if (std::gcd(q, r) != 1) throw DomainError("needs gcd(q, r) = 1");
    require_bound(n);
    const BigInt half = floor_div(BigInt(r) * n - BigInt(r) * q * q, BigInt(2) * q);
    return to_int64(ceil_div(half * (q - 1), BigInt(q)) - 1);
}

namespace {

// Is p >= (q^2-q)*log2(3) / (q(3-2*log2(3)) + log2(3))? For q <= 9 the
// denominator is positive, so this is 3pq >= log2(3)*(2pq+q^2-q-p), decided
// by comparing 2^(3pq) against 3^(2pq+q^2-q-p).
bool large_p_threshold(int64_t p, int64_t q) {
    const BigInt m = BigInt(2) * p * q + BigInt(q) * q - q - p;
    if (m <= 0) return true;
    return big_pow(2, BigInt(3) * p * q) > big_pow(3, m);
}

}  // namespace

BoundReport best_bound(const CanonicalTriple& T) {
    require_ordered(T, "bound selection");
    if (T.p < 2) throw DomainError("bound selection requires p >= 2");

    Rational mud;
    if (T.r == 1) {
        mud = Rational(T.p + T.q - 1, T.p + T.q);
    } else if (T.p % T.q == 0) {
        mud = BigInt(T.p) + T.q <= BigInt(T.r) * T.q ? Rational(T.q - 1, T.q)
                                                     : Rational(T.p + T.q - T.r, T.p + T.q);
    } else if (T.t > 1 && mu_case_iii_condition(T)) {
        mud = Rational(T.t - 1, T.t);
    } else {
        throw DomainError("no closed-form density applies to this equation");
    }
    const Rational mustar_d = (Rational(1) - Rational(T.r, T.q)) * Rational(T.t - 1, T.t);

    BoundReport report;
    report.equation = T;
    report.applicable.push_back({"max1", RateExpr::log3_multiple((mud - mustar_d) / 3),
                                 "densities known (counts 3^((mu-mu*)/3) containers)"});
    if (T.r == 1 && T.p % T.q == 0 && BigInt(T.p) <= BigInt(T.q) * T.q - T.q)
        report.applicable.push_back(
            {"max2", RateExpr::linear((mud - mustar_d) / 2), "r=1, q | p, p <= q^2-q"});
    report.applicable.push_back(
        {"max3", RateExpr::linear(mud * Rational(T.r, T.q)), "free subsets of [rn/q]"});
    const UpperRate up = fmax_upper_rate(T);
    report.applicable.push_back({"MainT1", up.rate, "container bound C*r/q"});

    if (T.r == 1) {
        const bool i_a = T.p % T.q == 0 && T.q <= 9 && T.p >= checked_mul(T.q, T.q) &&
                         large_p_threshold(T.p, T.q);
        report.case_label = i_a ? "i(a)" : "ii(a)";
    } else {
        const bool t_density = mud == Rational(T.t - 1, T.t);
        const bool small_q = T.p != T.q || T.q <= 18;
        if (T.p % T.q == 0 && BigInt(T.p) + T.q >= BigInt(T.r) * T.q && small_q)
            report.case_label = "i(c)";
        else if (t_density && small_q)
            report.case_label = "i(b)";
        else
            report.case_label = "ii(b)";
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < report.applicable.size(); ++i)
        if (report.applicable[i].rate < report.applicable[best].rate) best = i;
    // Among ties prefer the bound the case label designates.
    const std::string designated = report.case_label.rfind("ii", 0) == 0 ? "MainT1" : "max1";
    for (std::size_t i = 0; i < report.applicable.size(); ++i)
        if (report.applicable[i].name == designated &&
            report.applicable[i].rate == report.applicable[best].rate)
            best = i;
    report.best = report.applicable[best].name;
    report.best_rate = report.applicable[best].rate;

    if (T.p == T.q) {
        if (T.r == 1 && T.q >= 2)
            report.lower_rate = Rational(1, 2 * T.q);
        else if (T.r >= 2)
            report.lower_rate = Rational(T.r * (T.q - 1), 2 * T.q * T.q);
    }
    return report;
}

}  // namespace lfree
