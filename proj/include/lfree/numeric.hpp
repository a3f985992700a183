#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfree/errors.hpp"

namespace lfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Checked 64-bit arithmetic: throws OverflowError instead of wrapping.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_neg(int64_t a);

// floor(num/den) and ceil(num/den) rounding toward -inf / +inf for any sign
// of the numerator. den must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);
int64_t floor_div(int64_t num, int64_t den);
int64_t ceil_div(int64_t num, int64_t den);

// Throws OverflowError when v does not fit into int64.
int64_t to_int64(const BigInt& v);

// "num/den" in lowest terms with positive denominator; plain "num" when the
// denominator is 1.
std::string rational_to_string(const Rational& v);

// base^exp for a nonnegative exponent that must fit desk-scale limits.
BigInt big_pow(const BigInt& base, const BigInt& exp);

}  // namespace lfree
