#include "lfree/rate_expr.hpp"

#include <cmath>

namespace lfree {

namespace {

int sign_of(const Rational& v) {
    if (v == 0) return 0;
    return v > 0 ? 1 : -1;
}

// Sign of alpha - beta*log2(3) for positive rationals alpha, beta: compare
// 2^(num(alpha)*den(beta)) against 3^(num(beta)*den(alpha)). The two powers
// are never equal for positive exponents (one is even, one is odd).
int compare_power(const Rational& alpha, const Rational& beta) {
    const BigInt x = numerator(alpha) * denominator(beta);
    const BigInt y = numerator(beta) * denominator(alpha);
    const BigInt two_pow = big_pow(2, x);
    const BigInt three_pow = big_pow(3, y);
    if (two_pow < three_pow) return -1;
    return 1;
}

}  // namespace

int RateExpr::compare(const RateExpr& other) const {
    const Rational u = lin - other.lin;
    const Rational v = log3 - other.log3;
    // Sign of u + v*log2(3).
    if (v == 0) return sign_of(u);
    if (v > 0) {
        if (u >= 0) return 1;
        // u < 0: sign of v*log2(3) - (-u).
        return -compare_power(-u, v);
    }
    if (u <= 0) return -1;
    // u > 0, v < 0: sign of u - (-v)*log2(3).
    return compare_power(u, -v);
}

std::string RateExpr::str() const {
    if (log3 == 0) return rational_to_string(lin);
    const std::string tail = "(" + rational_to_string(log3) + ")*log2(3)";
    if (lin == 0) return tail;
    return rational_to_string(lin) + "+" + tail;
}

double RateExpr::approx() const {
    return lin.convert_to<double>() + log3.convert_to<double>() * std::log2(3.0);
}

}  // namespace lfree
