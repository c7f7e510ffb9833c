#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dstar/counting.hpp"
#include "dstar/errors.hpp"

using namespace dstar;

namespace {

Rat coeff_at(const TruncatedSeries& s, int n, long p) {
    std::array<std::optional<Rat>, kNumVars> v{};
    v[static_cast<int>(Var::p)] = Rat(p);
    v[static_cast<int>(Var::T)] = Rat(1);
    return s.coefficient(n).eval(v);
}

}  // namespace

TEST_CASE("pair_count closed form against brute force") {
    for (long p : {3L, 5L}) {
        for (int M = 0; M <= 3; ++M) {
            long pm = 1;
            for (int i = 0; i < M; ++i) pm *= p;
            for (long c = 0; c < pm; ++c)
                CHECK(pair_count(p, M, Int(c)) == pair_count_brute(p, M, Int(c)));
        }
    }
    CHECK(pair_count(3, 0, Int(0)) == 1);
    CHECK(pair_count(3, 1, Int(0)) == 5);
    CHECK(pair_count(3, 1, Int(1)) == 2);
}

TEST_CASE("named f values") {
    for (long p : {3L, 5L}) {
        CHECK(f_brute(p, 1, 2, 0) == 1);
        CHECK(f_brute(p, 0, 0, 1) == Int(p) * p);
        CHECK(f_brute(p, 1, 0, 1) == Int(p) * (2 * p - 1));
        CHECK(f_brute(p, 0, 1, 1) == Int(p) * p);
        CHECK(f_fast(p, 0, 0, 2) == int_pow(p, 4) + int_pow(p, 3) - int_pow(p, 2));
    }
    CHECK(f_fast(3, 0, 0, 1) == 9);
    CHECK(f_fast(3, 1, 0, 1) == 15);
}

TEST_CASE("f_brute equals f_fast including mixed alpha, beta") {
    for (long p : {3L, 5L})
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int n = 0; n <= (p == 3 ? 4 : 3); ++n)
                    CHECK(f_brute(p, a, b, n) == f_fast(p, a, b, n));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(f_brute(5, 0, 0, 4), TooLarge);   // 5^12 > 1e8
    CHECK_THROWS_AS(f_fast(1000003, 0, 0, 3), TooLarge);
}

TEST_CASE("series coefficients are the counts") {
    for (long p : {3L, 5L}) {
        for (int alpha = 0; alpha <= 3; ++alpha) {
            TruncatedSeries A = F_series(FKind::A0, alpha, 4);
            TruncatedSeries B = F_series(FKind::ZeroA, alpha, 4);
            for (int n = 0; n <= 4; ++n) {
                CHECK(coeff_at(A, n, p) == Rat(f_fast(p, alpha, 0, n)));
                CHECK(coeff_at(B, n, p) == Rat(f_fast(p, 0, alpha, n)));
            }
        }
    }
}

TEST_CASE("F series shapes") {
    TruncatedSeries F00 = F_series(FKind::ZeroA, 0, 1);
    CHECK(F00.coefficient(0) == Polynomial::one());
    CHECK(F00.coefficient(1) == parse_poly("p^2 T"));
    TruncatedSeries F10 = F_series(FKind::A0, 1, 1);
    CHECK(F10.coefficient(1) == parse_poly("(2 p^2 - p) T"));
    // F_{0,1} at order 2 has the (p^4 - 2p^3) T^2 pattern plus p^3 f(0,1,0).
    TruncatedSeries F01 = F_series(FKind::ZeroA, 1, 2);
    CHECK(coeff_at(F01, 2, 3) == Rat(f_brute(3, 0, 1, 2)));
}

TEST_CASE("F* removes exactly the low part") {
    CHECK(rational_eq(F_star_closed(0), F_closed(FKind::ZeroA, 0)));
    TruncatedSeries s1 = F_star_series(1, 3);
    CHECK(s1.coefficient(0).is_zero());
    CHECK(coeff_at(s1, 1, 3) == Rat(f_fast(3, 0, 1, 1)));
    TruncatedSeries s2 = F_star_series(2, 2);
    CHECK(s2.coefficient(2) == parse_poly("p^5 T^2"));
}

TEST_CASE("recurrences hold") {
    CHECK(recurrence_check(Recurrence::Base, 3, 0, 4));
    CHECK(recurrence_check(Recurrence::LStep, 3, 2, 3));
    CHECK(recurrence_check(Recurrence::EvenStep, 5, 1, 2));
    CHECK(recurrence_check(Recurrence::OddBase, 3, 0, 3));
}

TEST_CASE("alpha >= n frees xi") {
    for (long p : {3L, 5L})
        for (int n = 1; n <= 3; ++n)
            CHECK(f_fast(p, n, 0, n) == int_pow(p, n) * pair_count(p, n, Int(0)));
}
