#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lyq {

/// Exact rational scalar, always in canonical form (lowest terms, positive
/// denominator). All arithmetic in the library is exact; there is no
/// floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical rational from a num/den pair. Throws std::invalid_argument on
/// zero denominator.
Rational rat(long num, long den = 1);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& r);

/// Exact conversion to long long. Throws std::domain_error if the value is
/// not an integer or does not fit.
long long to_int64(const Rational& r);

}  // namespace lyq
