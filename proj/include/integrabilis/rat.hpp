#ifndef INTEGRABILIS_RAT_HPP
#define INTEGRABILIS_RAT_HPP

#include <gmpxx.h>
#include <string>

namespace integrabilis {

// Arbitrary-precision integers and rationals. mpq_class keeps the canonical
// reduced form (gcd 1, positive denominator) after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

} // namespace integrabilis

#endif
