#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bti {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; always build ratios here.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline long to_long(const Rational& q) {
    if (!is_integer(q))
        throw std::domain_error("rational is not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p())
        throw std::overflow_error("rational out of long range: " + q.get_str());
    return q.get_num().get_si();
}

// Serialized as "p" or "p/q", never through floating point.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace bti
