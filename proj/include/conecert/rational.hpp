#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conecert {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, gcd(|num|, den) = 1) as long as arithmetic goes through its
// operators; anything built by hand must call canonicalize().
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num", "num/den" or a decimal literal ("-0.25" -> -1/4). Decimals
// are converted digit-by-digit, never through binary floating point.
Rational parse_rational(const std::string& text);

// Canonical serialization, always "num/den" (e.g. "3/1", "-5/2").
std::string format_rational(const Rational& q);

// Bit length of the numerator, used as the elimination pivot score.
std::size_t numerator_bits(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

// n! as an exact rational (exact pairings need factorials of multi-indices).
Rational factorial(unsigned n);

}  // namespace conecert
