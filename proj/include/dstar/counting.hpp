#pragma once

#include "dstar/series.hpp"

namespace dstar {

// Counts for the congruence p^alpha xi^2 + p^beta eta zeta = 0 mod p^n and
// the generating functions built from them. Counts are arbitrary-precision
// integers; intermediate products overflow 64 bits already at p = 5, n = 5.

// #{(eta, zeta) in (Z/p^M)^2 : eta zeta = c mod p^M}, closed form in
// v = min(v_p(c), M): (v+1) p^{M-1}(p-1) for v < M, and
// M p^{M-1}(p-1) + p^M for c = 0. Validated against pair_count_brute.
Int pair_count(long p, int M, const Int& c);
Int pair_count_at_valuation(long p, int M, int v);
Int pair_count_brute(long p, int M, const Int& c);

// Exhaustive triple loop; guard p^{3n} <= 10^8.
Int f_brute(long p, int alpha, int beta, int n);

// Loops over xi only and counts the (eta, zeta) pairs through pair_count at
// the reduced modulus; guard p^n <= 10^8.
Int f_fast(long p, int alpha, int beta, int n);

enum class FKind {
    A0,     // F_{alpha,0}(T) = sum_n f(alpha, 0, n) T^n
    ZeroA,  // F_{0,alpha}(T) = sum_n f(0, alpha, n) T^n
};

// Closed forms of the generating functions, symbolic in p and T.
FactoredRational F_closed(FKind kind, int alpha);
TruncatedSeries F_series(FKind kind, int alpha, int order);

// F*_{0,alpha}(T) = sum_{n >= alpha} f(0, alpha, n) T^n.
FactoredRational F_star_closed(int alpha);
TruncatedSeries F_star_series(int alpha, int order);

// sum_alpha Y^alpha F*_{0,alpha}(T) as a closed form in (p, Y, T).
FactoredRational F_star_bivariate();

enum class Recurrence {
    Base,      // f(0,0,m+2) = (p^2-1) p^{2(m+1)} + p^3 f(0,0,m)
    LStep,     // f(l+1,0,m+1) = p^2 f(l,0,m) + (p-1) p^{2m+1}
    EvenStep,  // f(0,l+2,m+2) = p^5 f(0,l,m)
    OddBase,   // f(0,1,m+2) = 2 p^{2m+3}(p-1) + p^3 f(0,1,m)
};

// Checks the recurrence for all 0 <= l <= lmax, 0 <= m <= mmax with f
// computed by f_fast.
bool recurrence_check(Recurrence which, long p, int lmax, int mmax);

}  // namespace dstar
