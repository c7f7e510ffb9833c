#pragma once

#include <array>

#include "dstar/counting.hpp"

namespace dstar {

// Valuation triple (k, m, n) of a torus element
// h = diag(p^{n-k}, p^{m-k}, p^n, p^m, p^{n+k}, p^{m+k}, p^{m+n-k}, p^{m+n})
// together with the odd prime p. Validity: n >= m >= 0 and |k| <= m.
struct ThetaArgs {
    long p;
    int k, m, n;

    ThetaArgs(long p, int k, int m, int n);
    int l() const { return n - m; }
};

enum class CaseTag { Case1, Case2a, Case2b, Case3 };
const char* case_name(CaseTag tag);

enum class ThetaMode { Formula, Oracle };

// The half-open case partition: Case 1 is k >= 0; Case 2a/2b split
// max{-m,-l} <= k < 0 by the sign of 2k+l; Case 3 is -m <= k < -l.
CaseTag classify(const ThetaArgs& args);

// theta_3(h) = p^{6(2m+2n-k)}.
Int theta3(const ThetaArgs& args);

// The case formulas for theta-tilde, with f supplied by f_fast.
Rat theta_tilde_formula(const ThetaArgs& args);

// Haar measure of the subset of Q_p^3 cut out by the four valuation
// conditions on (b11, b12, b21), normalized so Z_p^3 has measure 1.
// Computed by shifting each variable to its lower bound and counting the
// det-condition congruence with pair_count.
Rat theta_tilde_oracle(const ThetaArgs& args);

// Measure fraction of {(u,v,w) in Z_p^3 : v(p^a u^2 + p^b v w) >= t},
// counted modulo p^{t+slack}; slack > 0 re-counts at higher precision and
// must not change the result.
Rat congruence_measure(long p, int a, int b, int t, int slack = 0);

// theta_0 = p^{4k+3m+n} theta-tilde; theta = theta_0 theta_3.
Rat theta0(const ThetaArgs& args, ThetaMode mode);
Rat theta_full(const ThetaArgs& args, ThetaMode mode);

// theta in the cocharacter coordinates e = (n-m, m-k, m): the e-form case
// formulas p^{13e1+2e2+26e3} theta-tilde(e), on the integrality region
// e_i >= 0, 2e3 >= e2.
Rat theta_tilde_e(const std::array<int, 3>& e, long p);
Rat theta_e(const std::array<int, 3>& e, long p);

// The x^2 weight theta(h) = |det A|^{-10} |mu|^{-12} as a power of p.
Rat theta_x2(int val_det_a, int val_mu, long p);

// Measure of the original twelve-condition parameter set in Q_p^7
// (beta, b11, b12, b21, c11, c12, c21); equals theta_0. Seven nested digit
// loops; guard p^{7M} <= 5*10^6.
Rat twelve_condition_measure(const ThetaArgs& args);

}  // namespace dstar
