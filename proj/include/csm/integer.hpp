#pragma once

#include <gmpxx.h>

#include <string>

namespace csm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal string; throws std::invalid_argument otherwise.
Integer parseInteger(const std::string& text);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parseRational(const std::string& text);

inline std::string toDecimal(const Integer& x) { return x.get_str(10); }

Integer binomial(long n, long k);

}  // namespace csm
