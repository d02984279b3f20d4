#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ehrwt {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Inverse of to_string; accepts optional sign and whitespace-free "p" or
// "p/q". Throws InputError on malformed text or a zero denominator.
Rational rational_from_string(std::string_view text);

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(long n, long k);

}  // namespace ehrwt
