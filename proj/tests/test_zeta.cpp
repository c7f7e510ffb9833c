#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dstar/errors.hpp"
#include "dstar/json_io.hpp"
#include "dstar/zeta.hpp"

using namespace dstar;

TEST_CASE("x^2 assembled equals closed") {
    CHECK(rational_eq(zeta_x2_assembled(), zeta_x2_closed()));
}

TEST_CASE("x^2 expansion values") {
    TruncatedSeries s = expand(zeta_x2_closed(), 4);
    CHECK(s.coefficient(0) == Polynomial::one());
    CHECK(s.coefficient(3) == parse_poly("p^8 t^3"));
    CHECK(s.coefficient(4) == parse_poly("(p^11 + p^10) t^4"));
    auto at3 = eval_coefficients(s, 3);
    CHECK(at3.at(3) == 6561);
    CHECK(at3.at(4) == 236196);
}

TEST_CASE("x^3 assembly equals every printed display") {
    X3Assembly a = zeta_x3_assemble();
    CHECK(rational_eq(a.z, zeta_x3_mid_display()));
    CHECK(rational_eq(a.z, zeta_x3_pre_display()));
    CHECK(rational_eq(a.z, zeta_x3_closed_X()));
}

TEST_CASE("X substitution matches the (p,t) closed form") {
    CHECK(rational_eq(zeta_x3_closed_X().substitute(x_substitution()), zeta_x3_closed_s()));
    // X2 X3 -> p^28 t^10.
    FactoredRational m = FactoredRational::from_monomial(parse_mono("X2 X3"));
    CHECK(m.substitute(x_substitution()).prefactor() == parse_mono("p^28 t^10"));
}

TEST_CASE("intermediate cone sums") {
    X3Assembly a = zeta_x3_assemble();
    std::array<std::optional<Monomial>, kNumVars> T_to{};
    T_to[static_cast<int>(Var::T)] = parse_mono("X2 X3");
    FactoredRational f00 = F_closed(FKind::ZeroA, 0).substitute(T_to);
    // Z34 = F00(X2X3)/(1-p^3X3) and Z42+ = X2^2X3 F00(X2X3)/(1-X2^2X3)
    // give Z23.
    FactoredRational z34 = FactoredRational::geometric(parse_mono("p^3 X3")) * f00;
    FactoredRational z42 = FactoredRational::geometric(parse_mono("X2^2 X3"))
                               .times_monomial(parse_mono("X2^2 X3")) * f00;
    CHECK(rational_eq(a.z23, z34 + z42));
}

TEST_CASE("series oracle x^2, including p=2") {
    for (long p : {2L, 3L, 5L}) {
        auto got = eval_coefficients(series_oracle(GroupTag::X2, p, 8, ThetaMode::Formula), p);
        auto want = eval_coefficients(expand(zeta_x2_closed(), 8), p);
        CHECK(got == want);
    }
}

TEST_CASE("series oracle x^3 formula mode") {
    for (long p : {3L, 5L}) {
        auto got = eval_coefficients(series_oracle(GroupTag::X3, p, 12, ThetaMode::Formula), p);
        auto want = eval_coefficients(expand(zeta_x3_closed_s(), 12), p);
        CHECK(got == want);
        for (const auto& [d, c] : got) {
            CHECK(is_integer(c));
            CHECK(c >= 0);
        }
    }
}

TEST_CASE("series oracle x^3 oracle-theta mode") {
    auto got = eval_coefficients(series_oracle(GroupTag::X3, 3, 9, ThetaMode::Oracle), 3);
    auto want = eval_coefficients(expand(zeta_x3_closed_s(), 9), 3);
    CHECK(got == want);
}

TEST_CASE("series oracle rejects p=2 for x^3") {
    CHECK_THROWS_AS(series_oracle(GroupTag::X3, 2, 5, ThetaMode::Formula),
                    OddPrimeRequired);
}

TEST_CASE("functional equation detected on the assembled shapes too") {
    // The assembled forms have different denominator multisets, exercising
    // the cross-multiplication fallback of the quotient test.
    auto fe = funeq_detect(zeta_x2_assembled());
    REQUIRE(fe.has_value());
    CHECK(fe->parity == 1);
    CHECK(fe->b == 21);
    CHECK(fe->c == 8);
    FactoredRational z = zeta_x3_assemble().z;
    auto q = monomial_quotient(z.invert_vars({Var::p, Var::X1, Var::X2, Var::X3}), z);
    REQUIRE(q.has_value());
    CHECK(q->first == -1);
    CHECK(q->second == parse_mono("p^4 X2 X3"));
}

TEST_CASE("functional equations") {
    FunEq x2 = funeq_check(GroupTag::X2);
    CHECK(x2.parity == 1);
    CHECK(x2.b == 21);
    CHECK(x2.c == 8);
    XFunEq xf = funeq_x3_xlevel();
    CHECK(xf.coef == -1);
    CHECK(xf.factor == parse_mono("p^4 X2 X3"));
    FunEq x3 = funeq_check(GroupTag::X3);
    CHECK(x3.parity == 1);
    CHECK(x3.b == 32);
    CHECK(x3.c == 10);
}

TEST_CASE("JSON round trip is byte identical") {
    for (const FactoredRational& f :
         {zeta_x2_closed(), zeta_x3_closed_X(), zeta_x3_closed_s()}) {
        std::string once = rational_to_json(f);
        std::string twice = rational_to_json(rational_from_json(once));
        CHECK(once == twice);
    }
}

TEST_CASE("latex display style") {
    CHECK(rational_latex(zeta_x2_closed()) ==
          "\\frac{1+p^{10-4s}}{(1-p^{8-3s})(1-p^{11-4s})(1-p^{12-5s})}");
}
