#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symtutte {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// "3", "-1/2"
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
Integer binomial(unsigned long n, unsigned long k);

/// Nonnegative residue of an integer modulo q.
std::uint32_t residue(const Integer& value, std::uint32_t q);

}  // namespace symtutte
