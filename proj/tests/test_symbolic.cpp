#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dstar/errors.hpp"
#include "dstar/factored.hpp"
#include "dstar/series.hpp"

using namespace dstar;

TEST_CASE("polynomial arithmetic normal forms") {
    // (1 - pT) + pT = 1
    Polynomial a = parse_poly("1 - p T");
    Polynomial b = parse_poly("p T");
    CHECK(a + b == Polynomial::one());

    // (1 - pT)(1 + pT) = 1 - p^2 T^2
    CHECK(parse_poly("(1 - p T)(1 + p T)") == parse_poly("1 - p^2 T^2"));

    // cancellation leaves no zero terms stored
    Polynomial z = parse_poly("p^2 T - p^2 T");
    CHECK(z.is_zero());
    CHECK(z.terms().empty());

    // difference-of-squares cross check: (1-p^2T^2)*1 == (1-p^2T)(1+p^2T)
    CHECK(parse_poly("1 - p^4 T^2") == parse_poly("(1 - p^2 T)(1 + p^2 T)"));
}

TEST_CASE("parser round trips and rejects junk") {
    // canonical order is lexicographic by exponent vector, so the negative
    // exponent sorts first
    CHECK(parse_poly("1 - p^{-1} t^{-3}").str() == "-p^-1 t^-3 + 1");
    CHECK(mono_str(parse_mono("p^3 X1^2 X2^2 X3")) == "p^3 X1^2 X2^2 X3");
    CHECK_THROWS_AS(parse_poly("1 + q"), ParseError);
    CHECK_THROWS_AS(parse_mono("1 + p"), ParseError);
}

TEST_CASE("rational_eq by cross multiplication") {
    // 1/(1-pT) == (1+pT)/(1-p^2T^2)
    FactoredRational f = FactoredRational::geometric(parse_mono("p T"));
    FactoredRational g = frac(parse_poly("1 + p T"), {{parse_mono("p^2 T^2"), 1}});
    CHECK(rational_eq(f, g));

    FactoredRational h = FactoredRational::geometric(parse_mono("p^2 T"));
    CHECK_FALSE(rational_eq(f, h));
}

TEST_CASE("geometric expansion") {
    // 1/(1-p^8 t^3) through order 7
    FactoredRational f = FactoredRational::geometric(parse_mono("p^8 t^3"));
    TruncatedSeries s = expand(f, 7);
    CHECK(s.coefficient(0) == Polynomial::one());
    CHECK(s.coefficient(3) == parse_poly("p^8 t^3"));
    CHECK(s.coefficient(6) == parse_poly("p^16 t^6"));
    CHECK(s.coefficient(1).is_zero());
    CHECK(s.coefficient(7).is_zero());
}

TEST_CASE("expansion of F00 matches the base recurrence value") {
    // (1-p^2T^2)/((1-p^2T)(1-p^3T^2)) starts 1 + p^2 T + (p^4+p^3-p^2) T^2.
    FactoredRational f = frac(parse_poly("1 - p^2 T^2"),
                              {{parse_mono("p^2 T"), 1}, {parse_mono("p^3 T^2"), 1}});
    TruncatedSeries s = expand(f, 2);
    CHECK(s.coefficient(0) == Polynomial::one());
    CHECK(s.coefficient(1) == parse_poly("p^2 T"));
    CHECK(s.coefficient(2) == parse_poly("(p^4 + p^3 - p^2) T^2"));
}

TEST_CASE("expansion rejects non-convergent factors") {
    FactoredRational f = FactoredRational::geometric(parse_mono("p^3"));
    CHECK_THROWS_AS(expand(f, 4), NonConvergentFactor);
}

TEST_CASE("expansion with a numerator below degree zero") {
    FactoredRational f = frac(parse_poly("t^-1 + 1"), {{parse_mono("p t"), 1}});
    TruncatedSeries s = expand(f, 2);
    CHECK(s.coefficient(-1) == parse_poly("t^-1"));
    CHECK(s.coefficient(0) == parse_poly("1 + p"));
    CHECK(s.coefficient(1) == parse_poly("p t + p^2 t"));
    CHECK(s.coefficient(2) == parse_poly("p^2 t^2 + p^3 t^2"));
}

TEST_CASE("substitution") {
    std::array<std::optional<Monomial>, kNumVars> xdefs{};
    xdefs[static_cast<int>(Var::X1)] = parse_mono("p^14 t^5");
    xdefs[static_cast<int>(Var::X2)] = parse_mono("p^2 t");
    xdefs[static_cast<int>(Var::X3)] = parse_mono("p^26 t^9");

    // X2 X3 -> p^28 t^10
    FactoredRational f = FactoredRational::from_monomial(parse_mono("X2 X3"));
    CHECK(f.substitute(xdefs).prefactor() == parse_mono("p^28 t^10"));

    // p -> p^{-1}, t -> t^{-1} on 1 - p^8 t^3
    FactoredRational g(parse_poly("1 - p^8 t^3"));
    CHECK(g.invert_vars({Var::p, Var::t}).numerator() == parse_poly("1 - p^-8 t^-3"));

    // X1 -> p^14 t^5 inside 1/(1 - p X1)
    FactoredRational h = FactoredRational::geometric(parse_mono("p X1"));
    FactoredRational hs = h.substitute(xdefs);
    REQUIRE(hs.denominator().size() == 1);
    CHECK(hs.denominator()[0].m == parse_mono("p^15 t^5"));
}

TEST_CASE("substitution respects composition") {
    std::array<std::optional<Monomial>, kNumVars> xdefs{};
    xdefs[static_cast<int>(Var::X1)] = parse_mono("p^14 t^5");
    xdefs[static_cast<int>(Var::X2)] = parse_mono("p^2 t");
    xdefs[static_cast<int>(Var::X3)] = parse_mono("p^26 t^9");

    std::array<std::optional<Monomial>, kNumVars> inv_then{};
    inv_then[static_cast<int>(Var::p)] = parse_mono("p^-1");
    inv_then[static_cast<int>(Var::t)] = parse_mono("t^-1");
    inv_then[static_cast<int>(Var::X1)] = parse_mono("p^-14 t^-5");
    inv_then[static_cast<int>(Var::X2)] = parse_mono("p^-2 t^-1");
    inv_then[static_cast<int>(Var::X3)] = parse_mono("p^-26 t^-9");

    FactoredRational f = frac(parse_poly("1 + p^2 X1 X2 - p X2^2 X3"),
                              {{parse_mono("p X1"), 1}, {parse_mono("X2^2 X3"), 2}});
    FactoredRational left = f.substitute(xdefs).invert_vars({Var::p, Var::t});
    FactoredRational right = f.substitute(inv_then);
    CHECK(rational_eq(left, right));
}

TEST_CASE("funeq detection on 1/(1-pt)") {
    FactoredRational f = FactoredRational::geometric(parse_mono("p t"));
    auto fe = funeq_detect(f);
    REQUIRE(fe.has_value());
    CHECK(fe->parity == 1);
    CHECK(fe->b == 1);
    CHECK(fe->c == 1);
}

TEST_CASE("funeq detection returns nothing without a monomial factor") {
    // 1/(1-pt) + 1/(1-p^3t^2) has no monomial symmetry factor.
    FactoredRational f = FactoredRational::geometric(parse_mono("p t")) +
                         FactoredRational::geometric(parse_mono("p^3 t^2"));
    CHECK_FALSE(funeq_detect(f).has_value());
}

namespace {

FactoredRational random_fr(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::uniform_int_distribution<int> coef_dist(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> nden(0, 3);
    auto rand_mono = [&](bool nonzero) {
        Monomial m;
        do {
            m = Monomial{};
            m[Var::p] = exp_dist(rng);
            m[Var::t] = exp_dist(rng);
        } while (nonzero && m[Var::t] == 0);
        return m;
    };
    Polynomial num;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        int c = coef_dist(rng);
        if (c != 0) num.add_term(rand_mono(false), Rat(c));
    }
    if (num.is_zero()) num = Polynomial::one();
    FactoredRational f(num);
    int d = nden(rng);
    for (int i = 0; i < d; ++i) f = f.over(rand_mono(true));
    return f;
}

}  // namespace

TEST_CASE("expand multiplied back by the denominator returns the numerator") {
    std::mt19937 rng(20240811);
    const int order = 9;
    for (int trial = 0; trial < 40; ++trial) {
        FactoredRational f = random_fr(rng);
        TruncatedSeries s = expand(f, order);
        TruncatedSeries den(default_grading(), order);
        den.add(f.cleared_denominator());
        TruncatedSeries back = s * den;
        TruncatedSeries expect(default_grading(), order);
        expect.add(f.cleared_numerator());
        CHECK(back == expect);
    }
}

TEST_CASE("rational_eq is an equivalence and implies equal expansions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        FactoredRational f = random_fr(rng);
        CHECK(rational_eq(f, f));
        // g: same value, different shape (extra matching factor top+bottom)
        Monomial extra = parse_mono("p^2 t");
        FactoredRational g =
            FactoredRational(f.cleared_numerator() * (Polynomial::one() -
                                                      Polynomial::from_monomial(extra)));
        for (const auto& df : f.denominator()) g = g.over(df.m, df.mult);
        g = g.over(extra);
        CHECK(rational_eq(f, g));
        CHECK(rational_eq(g, f));
        CHECK(expand(f, 6) == expand(g, 6));
    }
}

TEST_CASE("series eval at numeric p") {
    FactoredRational f = frac(parse_poly("1 + p^10 t^4"),
                              {{parse_mono("p^8 t^3"), 1}});
    auto coeffs = eval_coefficients(expand(f, 4), 3);
    CHECK(coeffs.at(0) == 1);
    CHECK(coeffs.at(3) == 6561);
    CHECK(coeffs.at(4) == 59049);
}
