#pragma once

#include <gmpxx.h>

#include <string>

namespace pvi {

/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

/// Residue of q modulo the prime p; false if p divides the denominator.
bool reduce_mod(const Rational &q, unsigned long p, unsigned long &out);

} // namespace pvi
