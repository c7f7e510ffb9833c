#include "dstar/counting.hpp"

#include "dstar/errors.hpp"

namespace dstar {

namespace {

constexpr long kBruteGuard = 100000000;  // 10^8 iterations / residues

long pow_checked(long p, int n, long guard, const char* who) {
    long r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > guard / p)
            throw TooLarge(std::string(who) + ": p^" + std::to_string(n) +
                           " exceeds the 10^8 guard");
        r *= p;
    }
    return r;
}

int residue_valuation(long x, long p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

Int pair_count_at_valuation(long p, int M, int v) {
    if (M < 0) throw InvalidArgs("pair_count: M >= 0 required");
    if (M == 0) return 1;
    if (v > M) v = M;
    Int unit_layer = int_pow(p, M - 1) * (p - 1);  // solutions per valuation class
    if (v < M) return (v + 1) * unit_layer;
    return M * unit_layer + int_pow(p, M);
}

Int pair_count(long p, int M, const Int& c) {
    if (M == 0) return 1;
    Int pm = int_pow(p, M);
    Int r = c % pm;
    if (r < 0) r += pm;
    int v = 0;
    while (v < M && r != 0 && mpz_divisible_ui_p(r.get_mpz_t(), p)) {
        r /= static_cast<unsigned long>(p);
        ++v;
    }
    if (r == 0) v = M;
    return pair_count_at_valuation(p, M, v);
}

Int pair_count_brute(long p, int M, const Int& c) {
    long pm = pow_checked(p, M, kBruteGuard, "pair_count_brute");
    long cc = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(pm)));
    long count = 0;
    for (long a = 0; a < pm; ++a)
        for (long b = 0; b < pm; ++b)
            if ((a * b - cc) % pm == 0) ++count;
    return Int(count);
}

Int f_brute(long p, int alpha, int beta, int n) {
    if (n < 0 || alpha < 0 || beta < 0) throw InvalidArgs("f_brute: nonnegative args");
    if (n == 0) return 1;
    long pn = 1;
    {
        // guard is on the full p^{3n} loop
        long total = 1;
        for (int i = 0; i < 3 * n; ++i) {
            if (total > kBruteGuard / p)
                throw TooLarge("f_brute: p^{3n} exceeds the 10^8 guard");
            total *= p;
        }
        for (int i = 0; i < n; ++i) pn *= p;
    }
    long pa = 1;
    for (int i = 0; i < std::min(alpha, n); ++i) pa *= p;
    if (alpha >= n) pa = 0;  // p^alpha = 0 mod p^n
    long pb = 1;
    for (int i = 0; i < std::min(beta, n); ++i) pb *= p;
    if (beta >= n) pb = 0;

    long count = 0;
    for (long xi = 0; xi < pn; ++xi) {
        long sq = (pa * ((xi * xi) % pn)) % pn;
        for (long eta = 0; eta < pn; ++eta) {
            long step = (pb * eta) % pn;
            for (long zeta = 0; zeta < pn; ++zeta) {
                if ((sq + step * zeta) % pn == 0) ++count;
            }
        }
    }
    return Int(count);
}

Int f_fast(long p, int alpha, int beta, int n) {
    if (n < 0 || alpha < 0 || beta < 0) throw InvalidArgs("f_fast: nonnegative args");
    if (n == 0) return 1;
    long pn = pow_checked(p, n, kBruteGuard, "f_fast");
    long pa = 1;
    for (int i = 0; i < std::min(alpha, n); ++i) pa *= p;
    if (alpha >= n) pa = 0;

    Int total(0);
    for (long xi = 0; xi < pn; ++xi) {
        long c = (pa == 0) ? 0 : (pa * ((xi * xi) % pn)) % pn;  // -c has equal valuation
        int vc = residue_valuation(c, p, n);
        if (beta >= n) {
            if (vc >= n) total += int_pow(p, 2 * n);
            continue;
        }
        // p^beta eta zeta = -c mod p^n. Solvable only when v(c) >= beta;
        // then eta zeta = -c/p^beta mod p^{n-beta} and the beta low digits
        // of eta and zeta are free.
        if (vc >= n) {
            total += int_pow(p, 2 * beta) * pair_count_at_valuation(p, n - beta, n - beta);
        } else if (vc >= beta) {
            total += int_pow(p, 2 * beta) * pair_count_at_valuation(p, n - beta, vc - beta);
        }
    }
    return total;
}

namespace {

Monomial mT(int k) { return mono({{Var::T, k}}); }
Monomial mp(int k) { return mono({{Var::p, k}}); }

}  // namespace

FactoredRational F_closed(FKind kind, int alpha) {
    if (alpha < 0) throw InvalidArgs("F_closed: alpha >= 0");
    if (kind == FKind::A0) {
        // (1-pT)/(1-p^2T)^2 + p^{2a+1} T^{a+1} (1-p)(1-pT) /
        //                     ((1-p^2T)^2 (1-p^3T^2))
        FactoredRational head = frac(parse_poly("1 - p T"), {{parse_mono("p^2 T"), 2}});
        Polynomial tail_num = Polynomial::from_monomial(
                                  mp(2 * alpha + 1) * mT(alpha + 1)) *
                              parse_poly("(1 - p)(1 - p T)");
        FactoredRational tail =
            frac(tail_num, {{parse_mono("p^2 T"), 2}, {parse_mono("p^3 T^2"), 1}});
        return head + tail;
    }
    if (alpha == 0)
        return frac(parse_poly("1 - p^2 T^2"),
                    {{parse_mono("p^2 T"), 1}, {parse_mono("p^3 T^2"), 1}});
    FactoredRational head = frac(parse_poly("1 + p^2 T"), {{parse_mono("p^5 T^2"), 1}});
    if (alpha % 2 == 1) {
        Polynomial num = Polynomial::from_monomial(mp((5 * alpha + 1) / 2) * mT(alpha + 1)) *
                         parse_poly("(p - 1)^2 (1 + p^4 T^2)");
        return head - frac(num, {{parse_mono("p^2 T"), 1},
                                 {parse_mono("p^5 T^2"), 1},
                                 {parse_mono("p^3 T^2"), 1}});
    }
    Polynomial num = Polynomial::from_monomial(mp((5 * alpha + 4) / 2) * mT(alpha + 2)) *
                     parse_poly("(p - 1)^2 (1 + p)");
    return head - frac(num, {{parse_mono("p^2 T"), 1},
                             {parse_mono("p^5 T^2"), 1},
                             {parse_mono("p^3 T^2"), 1}});
}

TruncatedSeries F_series(FKind kind, int alpha, int order) {
    return expand(F_closed(kind, alpha), order);
}

namespace {

// The bracketed tails shared by F* and its Y-sum.
FactoredRational fstar_bracket_odd() {
    FactoredRational head = frac(parse_poly("1 + p^3 T"), {{parse_mono("p^5 T^2"), 1}});
    FactoredRational tail = frac(parse_poly("p T (p - 1)^2 (1 + p^4 T^2)"),
                                 {{parse_mono("p^2 T"), 1},
                                  {parse_mono("p^5 T^2"), 1},
                                  {parse_mono("p^3 T^2"), 1}});
    return head - tail;
}

FactoredRational fstar_bracket_even() {
    FactoredRational head = frac(parse_poly("1 + p^2 T"), {{parse_mono("p^5 T^2"), 1}});
    FactoredRational tail = frac(parse_poly("p^2 T^2 (p - 1)^2 (1 + p)"),
                                 {{parse_mono("p^2 T"), 1},
                                  {parse_mono("p^5 T^2"), 1},
                                  {parse_mono("p^3 T^2"), 1}});
    return head - tail;
}

}  // namespace

FactoredRational F_star_closed(int alpha) {
    if (alpha < 0) throw InvalidArgs("F_star_closed: alpha >= 0");
    if (alpha % 2 == 1)
        return fstar_bracket_odd().times_monomial(mp((5 * alpha - 1) / 2) * mT(alpha));
    return fstar_bracket_even().times_monomial(mp(5 * alpha / 2) * mT(alpha));
}

TruncatedSeries F_star_series(int alpha, int order) {
    return expand(F_star_closed(alpha), order);
}

FactoredRational F_star_bivariate() {
    Monomial YT = mono({{Var::Y, 1}, {Var::T, 1}});
    FactoredRational odd_part = fstar_bracket_odd().times_monomial(mp(2) * YT);
    FactoredRational sum = odd_part + fstar_bracket_even();
    return sum.over(parse_mono("p^5 Y^2 T^2"));
}

bool recurrence_check(Recurrence which, long p, int lmax, int mmax) {
    for (int l = 0; l <= lmax; ++l) {
        for (int m = 0; m <= mmax; ++m) {
            switch (which) {
                case Recurrence::Base: {
                    Int lhs = f_fast(p, 0, 0, m + 2);
                    Int rhs = (int_pow(p, 2) - 1) * int_pow(p, 2 * (m + 1)) +
                              int_pow(p, 3) * f_fast(p, 0, 0, m);
                    if (lhs != rhs) return false;
                    break;
                }
                case Recurrence::LStep: {
                    Int lhs = f_fast(p, l + 1, 0, m + 1);
                    Int rhs = int_pow(p, 2) * f_fast(p, l, 0, m) +
                              (p - 1) * int_pow(p, 2 * m + 1);
                    if (lhs != rhs) return false;
                    break;
                }
                case Recurrence::EvenStep: {
                    Int lhs = f_fast(p, 0, l + 2, m + 2);
                    Int rhs = int_pow(p, 5) * f_fast(p, 0, l, m);
                    if (lhs != rhs) return false;
                    break;
                }
                case Recurrence::OddBase: {
                    Int lhs = f_fast(p, 0, 1, m + 2);
                    Int rhs = 2 * int_pow(p, 2 * m + 3) * (p - 1) +
                              int_pow(p, 3) * f_fast(p, 0, 1, m);
                    if (lhs != rhs) return false;
                    break;
                }
            }
        }
        if (which == Recurrence::Base || which == Recurrence::OddBase) break;  // no l role
    }
    return true;
}

}  // namespace dstar
