#pragma once

#include <string>

#include "lfree/numeric.hpp"

namespace lfree {

// Exponent rate lin + log3*log2(3): the coefficient of n in a base-2
// exponent. 2^(lin*n) * 3^(log3*n) growth is represented exactly; comparisons
// never go through floating point.
struct RateExpr {
    Rational lin;
    Rational log3;

    static RateExpr linear(Rational v) { return {std::move(v), 0}; }
    static RateExpr log3_multiple(Rational v) { return {0, std::move(v)}; }

    // -1 / 0 / +1 for this < / == / > other. Reduces to the sign of
    // u + v*log2(3) with rational u, v, decided by cross-multiplied
    // big-integer powers of 2 and 3; equality requires u = v = 0 since
    // log2(3) is irrational.
    int compare(const RateExpr& other) const;

    bool operator==(const RateExpr& other) const { return compare(other) == 0; }
    bool operator<(const RateExpr& other) const { return compare(other) < 0; }
    bool operator<=(const RateExpr& other) const { return compare(other) <= 0; }

    // "1/4", "(7/36)*log2(3)", "1/4+(1/3)*log2(3)", "0".
    std::string str() const;

    // Floating approximation for reports only; never used in decisions.
    double approx() const;
};

}  // namespace lfree
