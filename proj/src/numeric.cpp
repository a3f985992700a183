#include "lfree/numeric.hpp"

namespace lfree {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer addition overflows");
    return out;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer subtraction overflows");
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer multiplication overflows");
    return out;
}

int64_t checked_neg(int64_t a) {
    if (a == INT64_MIN) throw OverflowError("integer negation overflows");
    return -a;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("division by zero");
    BigInt q = num / den;  // truncates toward zero
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("division by zero");
    BigInt q = num / den;
    if ((num % den) != 0 && ((num < 0) == (den < 0))) ++q;
    return q;
}

int64_t floor_div(int64_t num, int64_t den) {
    return to_int64(floor_div(BigInt(num), BigInt(den)));
}

int64_t ceil_div(int64_t num, int64_t den) {
    return to_int64(ceil_div(BigInt(num), BigInt(den)));
}

int64_t to_int64(const BigInt& v) {
    if (v < INT64_MIN || v > INT64_MAX) throw OverflowError("value does not fit into 64 bits");
    return static_cast<int64_t>(v);
}

std::string rational_to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt big_pow(const BigInt& base, const BigInt& exp) {
    if (exp < 0) throw DomainError("negative exponent");
    if (exp > 1000000) throw OverflowError("exponent too large");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

}  // namespace lfree
