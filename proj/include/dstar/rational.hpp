#pragma once

#include <gmpxx.h>

#include <string>

namespace dstar {

// Exact arbitrary-precision integers and rationals. All arithmetic in the
// library goes through these; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int int_pow(long base, unsigned long exp) { return int_pow(Int(base), exp); }

// p^e as an exact rational, e may be negative.
inline Rat rat_pow(long base, long exp) {
    if (exp >= 0) return Rat(int_pow(base, static_cast<unsigned long>(exp)));
    Rat r(1, int_pow(base, static_cast<unsigned long>(-exp)));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// mpq_class(a, b) does not reduce; every ratio construction goes through
// here so comparisons stay well-defined.
inline Rat ratio(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace dstar
