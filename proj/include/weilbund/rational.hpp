#pragma once

#include <gmpxx.h>

#include <string>

namespace weilbund {

// Exact rational scalar. Every coefficient in the library is one of these;
// there is no floating point anywhere in the core.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Accepts "p", "-p" or "p/q" with q > 0 after canonicalization.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& q);

}  // namespace weilbund
