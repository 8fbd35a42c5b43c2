#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace p2coh {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps results canonical; see makeRational

Rational makeRational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", with optional sign and surrounding blanks.
Rational parseRational(std::string_view text);
Integer parseInteger(std::string_view text);

std::string toString(const Rational& x);
std::string toString(const Integer& x);

inline bool isInteger(const Rational& x) { return x.get_den() == 1; }
inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

Integer floorOf(const Rational& x);
Integer ceilOf(const Rational& x);

// Exact conversion helpers; throw std::overflow_error if out of range.
long toLong(const Integer& x);

}  // namespace p2coh
