#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dstar/errors.hpp"
#include "dstar/lie.hpp"
#include "dstar/theta.hpp"

using namespace dstar;

TEST_CASE("the torus element behind theta(p^k, p^m, p^n)") {
    // diag(mu^{-1}A, A, mu A, mu^{-1}det A, det A) at A = diag(p^n, p^m),
    // mu = p^k is h_element(3, mu A, mu^{-1}) and its diagonal is
    // (p^{n-k}, p^{m-k}, p^n, p^m, p^{n+k}, p^{m+k}, p^{m+n-k}, p^{m+n}).
    const long p = 3;
    for (auto [k, m, n] : {std::tuple<int, int, int>{0, 0, 0}, {1, 1, 2}, {-1, 1, 2}}) {
        QMat A(2, 2);
        A.at(0, 0) = rat_pow(p, n);
        A.at(1, 1) = rat_pow(p, m);
        Rat mu = rat_pow(p, k);
        QMat h = h_element(3, A.scaled(mu), Rat(1) / mu);
        const int want[8] = {n - k, m - k, n,         m,
                             n + k, m + k, m + n - k, m + n};
        for (int i = 0; i < 8; ++i) CHECK(h.at(i, i) == rat_pow(p, want[i]));
        // It is an automorphism of the x^3 lattice and its determinant
        // carries the weight exponent 5e1 + e2 + 9e3 of the Bruhat sum.
        LieLattice L = build_dstar(CompanionData::x_power(3), DBasis::C);
        CHECK(is_automorphism(L, h));
        Rat det(1);
        for (int i = 0; i < 8; ++i) det *= h.at(i, i);
        int e1 = n - m, e2 = m - k, e3 = m;
        CHECK(det == rat_pow(p, 5 * e1 + e2 + 9 * e3));
    }
}

TEST_CASE("the torus element behind the x^2 weights") {
    // diag(mu A, A, mu^2 det A, mu det A) at A = diag(lam1, lam2) with
    // lam1 = p^{e1+e3}, lam2 = p^{e3}, mu = p^{e2-e3}: determinant exponent
    // 4e1 + 5e2 + 3e3 and theta exponent 10 e1 + 12 e2 + 8 e3.
    const long p = 5;
    for (auto [e1, e2, e3] : {std::tuple<int, int, int>{1, 0, 0}, {0, 1, 0},
                              {0, 0, 1}, {2, 1, 3}}) {
        QMat A(2, 2);
        A.at(0, 0) = rat_pow(p, e1 + e3);
        A.at(1, 1) = rat_pow(p, e3);
        Rat mu = rat_pow(p, e2 - e3);
        QMat h = h_element(2, A, mu);
        LieLattice L = build_dstar(CompanionData::x_power(2), DBasis::C);
        CHECK(is_automorphism(L, h));
        Rat det(1);
        for (int i = 0; i < 6; ++i) det *= h.at(i, i);
        CHECK(det == rat_pow(p, 4 * e1 + 5 * e2 + 3 * e3));
        CHECK(theta_x2(e1 + 2 * e3, e2 - e3, p) ==
              rat_pow(p, 10 * e1 + 12 * e2 + 8 * e3));
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(ThetaArgs(2, 0, 0, 0), OddPrimeRequired);
    CHECK_THROWS_AS(ThetaArgs(9, 0, 0, 0), OddPrimeRequired);
    CHECK_THROWS_AS(ThetaArgs(3, 2, 1, 1), InvalidArgs);
    CHECK_THROWS_AS(ThetaArgs(3, 0, 2, 1), InvalidArgs);
    CHECK_NOTHROW(ThetaArgs(3, -2, 2, 5));
}

TEST_CASE("classification") {
    CHECK(classify(ThetaArgs(3, 0, 0, 0)) == CaseTag::Case1);
    CHECK(classify(ThetaArgs(3, 1, 2, 3)) == CaseTag::Case1);
    CHECK(classify(ThetaArgs(3, -1, 2, 2)) == CaseTag::Case3);
    CHECK(classify(ThetaArgs(3, -1, 2, 4)) == CaseTag::Case2a);
    CHECK(classify(ThetaArgs(3, -2, 2, 4)) == CaseTag::Case2b);
    CHECK(classify(ThetaArgs(3, -1, 1, 1)) == CaseTag::Case3);
}

TEST_CASE("theta3 powers") {
    CHECK(theta3(ThetaArgs(3, 0, 0, 0)) == 1);
    CHECK(theta3(ThetaArgs(3, 1, 1, 1)) == int_pow(3, 18));
    CHECK(theta3(ThetaArgs(3, -1, 1, 2)) == int_pow(3, 42));
}

TEST_CASE("theta tilde base cases") {
    CHECK(theta_tilde_formula(ThetaArgs(3, 0, 0, 0)) == 1);
    CHECK(theta_tilde_oracle(ThetaArgs(3, 0, 0, 0)) == 1);
    // Case 1 at (1,1,1): p^{3k+l} f(l,0,m-k) = p^3.
    CHECK(theta_tilde_formula(ThetaArgs(3, 1, 1, 1)) == rat_pow(3, 3));
    CHECK(theta_tilde_oracle(ThetaArgs(3, 1, 1, 1)) == rat_pow(3, 3));
    // Case 3 boundary (-2,2,2).
    CHECK(theta_tilde_formula(ThetaArgs(3, -2, 2, 2)) ==
          theta_tilde_oracle(ThetaArgs(3, -2, 2, 2)));
}

TEST_CASE("case 2b display value at (-2,3,4)") {
    // p^{5k+4l} f(0,-2k-l,m-k-l) with (k,m,n) = (-2,3,4).
    Rat display = rat_pow(3, -6) * Rat(f_fast(3, 0, 3, 4));
    CHECK(theta_tilde_formula(ThetaArgs(3, -2, 3, 4)) == display);
    CHECK(theta_tilde_oracle(ThetaArgs(3, -2, 3, 4)) == display);
}

TEST_CASE("formula equals oracle on the sweep") {
    for (long p : {3L, 5L}) {
        int nmax = p == 3 ? 4 : 3;
        for (int n = 0; n <= nmax; ++n)
            for (int m = 0; m <= n; ++m)
                for (int k = -m; k <= m; ++k) {
                    ThetaArgs args(p, k, m, n);
                    CAPTURE(p);
                    CAPTURE(k);
                    CAPTURE(m);
                    CAPTURE(n);
                    CHECK(theta_tilde_formula(args) == theta_tilde_oracle(args));
                }
    }
}

TEST_CASE("oracle precision idempotence") {
    for (int t = 1; t <= 4; ++t) {
        CHECK(congruence_measure(3, 2, 0, t) == congruence_measure(3, 2, 0, t, 1));
        CHECK(congruence_measure(3, 0, 1, t) == congruence_measure(3, 0, 1, t, 1));
    }
    CHECK(congruence_measure(3, 0, 0, 0) == 1);
    CHECK_THROWS_AS(congruence_measure(3, 0, 0, 30), PrecisionOverflow);
}

TEST_CASE("e coordinates") {
    CHECK(theta_e({0, 0, 0}, 3) == 1);
    CHECK_THROWS_AS(theta_e({-1, 0, 0}, 3), OutsideIntegralCone);
    CHECK_THROWS_AS(theta_e({0, 3, 1}, 3), OutsideIntegralCone);
    for (int e1 = 0; e1 <= 2; ++e1)
        for (int e3 = 0; e3 <= 2; ++e3)
            for (int e2 = 0; e2 <= 2 * e3; ++e2) {
                ThetaArgs args(3, e3 - e2, e3, e1 + e3);
                CHECK(theta_e({e1, e2, e3}, 3) == theta_full(args, ThetaMode::Formula));
            }
}

TEST_CASE("theta0 and theta_full consistency") {
    ThetaArgs args(3, 1, 1, 2);
    CHECK(theta0(args, ThetaMode::Formula) ==
          rat_pow(3, 4 + 3 + 2) * theta_tilde_formula(args));
    CHECK(theta_full(args, ThetaMode::Formula) ==
          Rat(theta3(args)) * theta0(args, ThetaMode::Formula));
    CHECK(theta_full(args, ThetaMode::Formula) == theta_full(args, ThetaMode::Oracle));
}

TEST_CASE("x2 weight") {
    CHECK(theta_x2(0, 0, 3) == 1);
    CHECK(theta_x2(1, 0, 3) == rat_pow(3, 10));
    CHECK(theta_x2(1, 1, 3) == rat_pow(3, 22));
}

TEST_CASE("twelve-condition measure equals theta0") {
    for (auto [k, m, n] : {std::tuple<int, int, int>{0, 0, 0},
                           {0, 0, 1},
                           {0, 1, 1},
                           {1, 1, 1},
                           {-1, 1, 1}}) {
        ThetaArgs args(3, k, m, n);
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(twelve_condition_measure(args) == theta0(args, ThetaMode::Oracle));
    }
}
