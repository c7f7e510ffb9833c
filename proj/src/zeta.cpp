#include "dstar/zeta.hpp"

#include "dstar/errors.hpp"
#include "dstar/json_io.hpp"

namespace dstar {

namespace {

std::array<std::optional<Monomial>, kNumVars> bind_T_to(const char* image) {
    std::array<std::optional<Monomial>, kNumVars> b{};
    b[static_cast<int>(Var::T)] = parse_mono(image);
    return b;
}

FactoredRational geo(const char* m) { return FactoredRational::geometric(parse_mono(m)); }

// (1 + p^{-1}) f
FactoredRational one_plus_pinv_times(const FactoredRational& f) {
    return f + f.times_monomial(parse_mono("p^-1"));
}

}  // namespace

FactoredRational zeta_x2_closed() {
    return frac(parse_poly("1 + p^10 t^4"), {{parse_mono("p^8 t^3"), 1},
                                             {parse_mono("p^11 t^4"), 1},
                                             {parse_mono("p^12 t^5"), 1}});
}

FactoredRational zeta_x2_assembled() {
    // Two Weyl terms: the identity sums over the closed octant, w0 over
    // e1 > 0 with weight p^{-1}. Coordinate weights p^{11-4s}, p^{12-5s},
    // p^{8-3s}.
    FactoredRational e1_closed = geo("p^11 t^4");
    FactoredRational e1_strict =
        geo("p^11 t^4").times_monomial(parse_mono("p^11 t^4")).times_monomial(
            parse_mono("p^-1"));
    FactoredRational rest = geo("p^12 t^5") * geo("p^8 t^3");
    return (e1_closed + e1_strict) * rest;
}

X3Assembly zeta_x3_assemble() {
    X3Assembly out;
    auto T_to_X2X3 = bind_T_to("X2 X3");

    // sum_r (p X1)^r F_{r,0}(T): the head of the F-lemma is geometric in
    // p X1, the tail in p^3 X1 T.
    FactoredRational head = frac(parse_poly("1 - p T"),
                                 {{parse_mono("p^2 T"), 2}, {parse_mono("p X1"), 1}});
    FactoredRational tail = frac(parse_poly("p T (1 - p)(1 - p T)"),
                                 {{parse_mono("p^2 T"), 2},
                                  {parse_mono("p^3 T^2"), 1},
                                  {parse_mono("p^3 X1 T"), 1}});
    out.sum_a = (head + tail).substitute(T_to_X2X3);

    // sum_r (p^{-1} X1 X2)^r F*_{0,r}(T) via the bivariate F* closed form
    // at Y = p^{-1} X1 X2.
    std::array<std::optional<Monomial>, kNumVars> bsub{};
    bsub[static_cast<int>(Var::Y)] = parse_mono("p^-1 X1 X2");
    bsub[static_cast<int>(Var::T)] = parse_mono("X2 X3");
    out.sum_b = F_star_bivariate().substitute(bsub);

    FactoredRational f00 = F_closed(FKind::ZeroA, 0).substitute(T_to_X2X3);

    out.z134 = geo("p^3 X3") * out.sum_a;
    out.z145p = geo("p^3 X1^2 X2^2 X3").times_monomial(parse_mono("p^3 X1^2 X2^2 X3")) *
                out.sum_a;
    out.z456p = geo("p^3 X1^2 X2^2 X3") * (out.sum_b - f00);
    out.z462p = geo("X2^2 X3").times_monomial(parse_mono("X2^2 X3")) * out.sum_b;
    out.z123 = out.z134 + out.z145p + out.z456p + out.z462p;
    out.z23 = (geo("p^3 X3") + geo("X2^2 X3").times_monomial(parse_mono("X2^2 X3"))) * f00;
    out.z = one_plus_pinv_times(out.z123) - out.z23.times_monomial(parse_mono("p^-1"));
    return out;
}

FactoredRational zeta_x3_closed_X() {
    Polynomial num =
        parse_poly("1 - p X2 X3") *
        parse_poly("-p^4 X1^3 X2^3 X3^2 - p^3 X1^3 X2^2 X3 - p^4 X1^2 X2^3 X3^2 "
                   "- p X1^2 X2^2 X3 + p^3 X1 X2 X3 + X1 + p X2 X3 + 1");
    return frac(std::move(num), {{parse_mono("p X1"), 1},
                                 {parse_mono("p^3 X3"), 1},
                                 {parse_mono("X2^2 X3"), 1},
                                 {parse_mono("p^2 X2 X3"), 1},
                                 {parse_mono("p^3 X1^2 X2^2 X3"), 1}});
}

FactoredRational zeta_x3_closed_s() {
    Polynomial num =
        parse_poly("1 - p^29 t^10") *
        parse_poly("-p^104 t^36 - p^90 t^31 - p^75 t^26 - p^59 t^21 "
                   "+ p^45 t^15 + p^29 t^10 + p^14 t^5 + 1");
    return frac(std::move(num), {{parse_mono("p^15 t^5"), 1},
                                 {parse_mono("p^29 t^9"), 1},
                                 {parse_mono("p^30 t^11"), 1},
                                 {parse_mono("p^30 t^10"), 1},
                                 {parse_mono("p^61 t^21"), 1}});
}

namespace {

// The shared third combination: the F*_{0,0} corrections with the
// (1+p^{-1}) weight on the first summand only.
FactoredRational x3_display_third() {
    return (one_plus_pinv_times(geo("p^3 X1^2 X2^2 X3")) +
            geo("p^3 X3").times_monomial(parse_mono("p^-1")) +
            geo("X2^2 X3").times_monomial(parse_mono("p^-1 X2^2 X3"))) *
           frac(parse_poly("1 - p^2 X2^2 X3^2"),
                {{parse_mono("p^2 X2 X3"), 1}, {parse_mono("p^3 X2^2 X3^2"), 1}});
}

FactoredRational x3_display_first() {
    return frac(parse_poly("(1 - p^6 X1^2 X2^2 X3^2)(1 - p X2 X3)"),
                {{parse_mono("p^3 X3"), 1},
                 {parse_mono("p^3 X1^2 X2^2 X3"), 1},
                 {parse_mono("p^2 X2 X3"), 2}}) *
           (geo("p X1") + frac(parse_poly("p (1 - p) X2 X3"),
                               {{parse_mono("p^3 X1 X2 X3"), 1},
                                {parse_mono("p^3 X2^2 X3^2"), 1}}));
}

}  // namespace

FactoredRational zeta_x3_mid_display() {
    FactoredRational br_odd =
        FactoredRational(parse_poly("1 + p^3 X2 X3")) -
        frac(parse_poly("p (p - 1)^2 X2 X3 (1 + p^4 X2^2 X3^2)"),
             {{parse_mono("p^2 X2 X3"), 1}, {parse_mono("p^3 X2^2 X3^2"), 1}});
    FactoredRational br_even =
        FactoredRational(parse_poly("1 + p^2 X2 X3")) -
        frac(parse_poly("p^2 (p - 1)^2 (1 + p) X2^2 X3^2"),
             {{parse_mono("p^2 X2 X3"), 1}, {parse_mono("p^3 X2^2 X3^2"), 1}});
    FactoredRational second =
        frac(Polynomial::one(), {{parse_mono("X2^2 X3"), 1},
                                 {parse_mono("p^3 X1^2 X2^2 X3"), 1},
                                 {parse_mono("p^5 X2^2 X3^2"), 1}}) *
        (br_odd.times_monomial(parse_mono("p X1 X2^2 X3")) + br_even);
    return one_plus_pinv_times(x3_display_first()) + one_plus_pinv_times(second) -
           x3_display_third();
}

FactoredRational zeta_x3_pre_display() {
    FactoredRational bracket =
        FactoredRational(parse_poly("1 + p^2 X2 X3 + p X1 X2^2 X3 + p^4 X1 X2^3 X3^2")) -
        frac(parse_poly("p^2 (p - 1)^2 X2^2 X3^2 (1 + p + X1 X2 + p^4 X1 X2^3 X3^2)"),
             {{parse_mono("p^2 X2 X3"), 1}, {parse_mono("p^3 X2^2 X3^2"), 1}});
    FactoredRational second =
        frac(Polynomial::one(), {{parse_mono("X2^2 X3"), 1},
                                 {parse_mono("p^3 X1^2 X2^2 X3"), 1},
                                 {parse_mono("p^5 X2^2 X3^2"), 1}}) *
        bracket;
    return one_plus_pinv_times(x3_display_first()) + one_plus_pinv_times(second) -
           x3_display_third();
}

std::string zeta_closed_latex(GroupTag g) {
    if (g == GroupTag::X2) return rational_latex(zeta_x2_closed());
    // Numerator factors kept apart, denominator in the printed order.
    Polynomial head = parse_poly("1 - p^29 t^10");
    Polynomial longf = parse_poly("-p^104 t^36 - p^90 t^31 - p^75 t^26 - p^59 t^21 "
                                  "+ p^45 t^15 + p^29 t^10 + p^14 t^5 + 1");
    std::string num = "(" + poly_latex(head) + ")(" + poly_latex(longf) + ")";
    std::string den;
    for (const char* f : {"p^15 t^5", "p^29 t^9", "p^30 t^11", "p^30 t^10", "p^61 t^21"})
        den += "(1-" + mono_latex(parse_mono(f)) + ")";
    return "\\frac{" + num + "}{" + den + "}";
}

std::array<std::optional<Monomial>, kNumVars> x_substitution() {
    std::array<std::optional<Monomial>, kNumVars> b{};
    b[static_cast<int>(Var::X1)] = parse_mono("p^14 t^5");
    b[static_cast<int>(Var::X2)] = parse_mono("p^2 t");
    b[static_cast<int>(Var::X3)] = parse_mono("p^26 t^9");
    return b;
}

TruncatedSeries series_oracle(GroupTag g, long p, int order, ThetaMode mode) {
    if (p < 2) throw InvalidArgs("series_oracle: p must be a prime");
    TruncatedSeries s(default_grading(), order);
    if (g == GroupTag::X2) {
        // t-degrees 4, 5, 3 per coordinate; theta = |det A|^{-10} |mu|^{-12}
        // evaluated at v(det A) = e1 + 2 e3, v(mu) = e2 - e3, times the
        // p^{e1} root factor.
        for (int e1 = 0; 4 * e1 <= order; ++e1)
            for (int e2 = 0; 4 * e1 + 5 * e2 <= order; ++e2)
                for (int e3 = 0; 4 * e1 + 5 * e2 + 3 * e3 <= order; ++e3) {
                    Rat w = rat_pow(p, e1) * theta_x2(e1 + 2 * e3, e2 - e3, p);
                    if (e1 > 0) w *= Rat(p + 1, p);
                    int d = 4 * e1 + 5 * e2 + 3 * e3;
                    s.add_term(mono({{Var::t, d}}), w);
                }
        return s;
    }
    if (p == 2) throw OddPrimeRequired("series_oracle: x^3 requires p > 2");
    // x^3: weights X1^{e1} X2^{e2} X3^{e3} theta-tilde(e) over the
    // integrality region e_i >= 0, 2 e3 >= e2, with t-degrees 5, 1, 9.
    for (int e1 = 0; 5 * e1 <= order; ++e1)
        for (int e3 = 0; 5 * e1 + 9 * e3 <= order; ++e3)
            for (int e2 = 0; e2 <= 2 * e3 && 5 * e1 + e2 + 9 * e3 <= order; ++e2) {
                Rat tilde;
                if (mode == ThetaMode::Formula) {
                    tilde = theta_tilde_e({e1, e2, e3}, p);
                } else {
                    tilde = theta_tilde_oracle(ThetaArgs(p, e3 - e2, e3, e1 + e3));
                }
                Rat w = rat_pow(p, 14 * e1 + 2 * e2 + 26 * e3) * tilde;
                if (e1 > 0) w *= Rat(p + 1, p);
                int d = 5 * e1 + e2 + 9 * e3;
                s.add_term(mono({{Var::t, d}}), w);
            }
    return s;
}

XFunEq funeq_x3_xlevel() {
    FactoredRational z = zeta_x3_closed_X();
    FactoredRational inv = z.invert_vars({Var::p, Var::X1, Var::X2, Var::X3});
    auto q = monomial_quotient(inv, z);
    if (!q)
        throw NoFunctionalEquation("x^3 X-level functional equation not found");
    return XFunEq{q->first, q->second};
}

FunEq funeq_check(GroupTag g) {
    if (g == GroupTag::X2) {
        auto fe = funeq_detect(zeta_x2_closed());
        if (!fe) throw NoFunctionalEquation("x^2 functional equation not found");
        return *fe;
    }
    // X-level first: the symmetry factor must be -p^4 X2 X3 exactly.
    XFunEq xf = funeq_x3_xlevel();
    Monomial expected = parse_mono("p^4 X2 X3");
    if (xf.coef != -1 || !(xf.factor == expected))
        throw NoFunctionalEquation("x^3 X-level symmetry factor is not -p^4 X2 X3");
    auto fe = funeq_detect(zeta_x3_closed_s());
    if (!fe) throw NoFunctionalEquation("x^3 (p,t) functional equation not found");
    // Consistency: -p^4 X2 X3 specializes to -p^{32} t^{10}.
    Monomial image = mono({{Var::p, 4}});
    image = image * (*x_substitution()[static_cast<int>(Var::X2)]);
    image = image * (*x_substitution()[static_cast<int>(Var::X3)]);
    if (fe->parity != 1 || image[Var::p] != fe->b || image[Var::t] != fe->c)
        throw NoFunctionalEquation("x^3 X-level and (p,t)-level factors disagree");
    return *fe;
}

}  // namespace dstar
