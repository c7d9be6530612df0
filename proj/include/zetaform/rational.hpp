#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace zetaform {

// Exact arithmetic is carried by GMP throughout. mpq_class keeps values
// canonical (reduced, positive denominator, zero as 0/1) under arithmetic,
// which is exactly the invariant the engine relies on.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational from a possibly unreduced pair.
Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(Integer numerator, Integer denominator);

/// Parses "p/q" or "p" (q > 0). Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

/// Exact value of a decimal literal like "-1.20205690". No exponents.
Rational decimal_to_rational(const std::string& text);

/// Prints "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// q^e for any integer exponent; 0^negative throws std::domain_error.
Rational rational_pow(const Rational& base, long exponent);

/// Generalized harmonic number H^(r)_m = sum_{i=1..m} i^-r, H^(r)_0 = 0.
/// Exact; uses balanced splitting so m ~ 10^5 stays cheap.
Rational harmonic(unsigned r, unsigned long m);

/// Bernoulli number B_m in the convention B_1 = -1/2. (Only even indices
/// matter downstream, so the B_1 convention is inert; it is the one the
/// defining recurrence sum_{j=0..m} C(m+1,j) B_j = 0 produces.)
Rational bernoulli(unsigned m);

/// B_0 .. B_m in one sweep of the recurrence.
std::vector<Rational> bernoulli_list(unsigned m);

}  // namespace zetaform
