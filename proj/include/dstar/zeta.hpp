#pragma once

#include "dstar/cones.hpp"

namespace dstar {

enum class GroupTag { X2, X3 };

// x^2: closed form (1 + p^{10} t^4) / ((1-p^8 t^3)(1-p^{11} t^4)(1-p^{12} t^5))
// and its two-Weyl-term assembly over the octant (e1 > 0 strict for w0,
// weighted p^{-1}).
FactoredRational zeta_x2_closed();
FactoredRational zeta_x2_assembled();

// The x^3 assembly out of the cone generating functions and the F-lemmas.
// All intermediates are exposed for testing; variables are (p, X1, X2, X3).
struct X3Assembly {
    FactoredRational sum_a;   // sum_r (p X1)^r F_{r,0}(X2 X3)
    FactoredRational sum_b;   // sum_r (p^{-1} X1 X2)^r F*_{0,r}(X2 X3)
    FactoredRational z134, z145p, z456p, z462p;
    FactoredRational z123, z23;
    FactoredRational z;       // (1 + p^{-1}) Z123 - p^{-1} Z23
};
X3Assembly zeta_x3_assemble();

// The final closed forms: the five-factor display in the X-variables and
// its specialization in (p, t).
FactoredRational zeta_x3_closed_X();
FactoredRational zeta_x3_closed_s();

// The two displayed intermediate combinations of the assembly, before the
// final simplification.
FactoredRational zeta_x3_mid_display();
FactoredRational zeta_x3_pre_display();

// X1 -> p^{14} t^5, X2 -> p^2 t, X3 -> p^{26} t^9.
std::array<std::optional<Monomial>, kNumVars> x_substitution();

// The closed form in the factored display shape, numerator factors kept
// separate and denominator factors in the printed order.
std::string zeta_closed_latex(GroupTag g);

// Direct Bruhat-sum lattice summation at numeric p: both Weyl terms over
// the integrality cone, theta from the case formulas or from the measure
// oracle. Grading is the t-degree (5, 1, 9 per coordinate for x^3; 4, 5, 3
// for x^2).
TruncatedSeries series_oracle(GroupTag g, long p, int order, ThetaMode mode);

// X-level functional equation: the monomial factor c * m with
// Z(p^{-1}, X^{-1}) = c * m * Z; expected -p^4 X2 X3.
struct XFunEq {
    Rat coef;
    Monomial factor;
};
XFunEq funeq_x3_xlevel();

// (p,t)-level functional equation of the closed form; throws
// NoFunctionalEquation when no monomial factor exists.
FunEq funeq_check(GroupTag g);

}  // namespace dstar
