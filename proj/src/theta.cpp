#include "dstar/theta.hpp"

#include <algorithm>
#include <vector>

#include "dstar/errors.hpp"

namespace dstar {

namespace {

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
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

long pow_long(long p, int n) {
    long r = 1;
    while (n-- > 0) r *= p;
    return r;
}

}  // namespace

ThetaArgs::ThetaArgs(long p_, int k_, int m_, int n_) : p(p_), k(k_), m(m_), n(n_) {
    if (!is_odd_prime(p))
        throw OddPrimeRequired("theta requires an odd prime, got " + std::to_string(p));
    if (m < 0 || n < m) throw InvalidArgs("theta requires n >= m >= 0");
    if (k > m || k < -m) throw InvalidArgs("theta requires |k| <= m");
}

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2a: return "Case2a";
        case CaseTag::Case2b: return "Case2b";
        case CaseTag::Case3: return "Case3";
    }
    return "?";
}

CaseTag classify(const ThetaArgs& args) {
    const int k = args.k, l = args.l();
    if (k >= 0) return CaseTag::Case1;
    if (std::max(-args.m, -l) <= k) {
        return 2 * k + l >= 0 ? CaseTag::Case2a : CaseTag::Case2b;
    }
    // k >= -m always holds, so falling through means k < -l.
    return CaseTag::Case3;
}

Int theta3(const ThetaArgs& args) {
    return int_pow(args.p, 6 * (2 * args.m + 2 * args.n - args.k));
}

Rat theta_tilde_formula(const ThetaArgs& args) {
    const long p = args.p;
    const int k = args.k, m = args.m, l = args.l();
    switch (classify(args)) {
        case CaseTag::Case1:
            return rat_pow(p, 3 * k + l) * Rat(f_fast(p, l, 0, m - k));
        case CaseTag::Case2a:
            return rat_pow(p, l - k) * Rat(f_fast(p, l + 2 * k, 0, m + k));
        case CaseTag::Case2b:
            return rat_pow(p, 4 * l + 5 * k) * Rat(f_fast(p, 0, -l - 2 * k, m - k - l));
        case CaseTag::Case3:
            return rat_pow(p, -l) * Rat(f_fast(p, 0, l, args.n + k));
    }
    throw InvalidArgs("unreachable");
}

Rat congruence_measure(long p, int a, int b, int t, int slack) {
    if (a < 0 || b < 0 || slack < 0) throw InvalidArgs("congruence_measure: bad args");
    if (a != 0 && b != 0) throw InvalidArgs("congruence_measure: one exponent must be 0");
    if (t <= 0) return Rat(1);
    const int N = t + slack;
    if (N > 26 || pow_long(p, std::min(N, 26)) > 100000000)
        throw PrecisionOverflow("congruence_measure: p^" + std::to_string(N) +
                                " exceeds the guard");
    const long pN = pow_long(p, N);
    const long pt = pow_long(p, t);
    long pa = a >= t ? 0 : pow_long(p, a);

    Int count(0);
    for (long u = 0; u < pN; ++u) {
        long c = (pa == 0) ? 0 : (pa * ((u * u) % pt)) % pt;
        int vc = residue_valuation(c, p, t);
        if (b >= t) {
            if (vc >= t) count += int_pow(p, 2 * N);
            continue;
        }
        if (vc < b) continue;
        // v w = c / p^b mod p^{t-b}; pairs mod p^N lift with p^{2(N-(t-b))}.
        int M = t - b;
        int v = vc >= t ? M : vc - b;
        count += int_pow(p, 2 * (N - M)) * pair_count_at_valuation(p, M, v);
    }
    Rat r = Rat(count) / Rat(int_pow(p, 3 * N));
    r.canonicalize();
    return r;
}

Rat theta_tilde_oracle(const ThetaArgs& args) {
    const long p = args.p;
    const int k = args.k, m = args.m, n = args.n;
    // Unconditional lower bounds of the three shifted parameters.
    const int L1 = std::max(-m, -k - n);           // b11
    const int L2 = -n + std::max(0, -k);           // b21
    const int L3 = -m + std::max(0, -k);           // b12
    // After b = p^L u the det condition v(p^{2L1} u^2 + p^{L2+L3} v w) >= -k-n
    // normalizes to exponents (a, b) with min(a, b) = 0.
    const int a0 = 2 * L1, b0 = L2 + L3;
    const int c0 = std::min(a0, b0);
    const int t = (-k - n) - c0;
    Rat measure = congruence_measure(p, a0 - c0, b0 - c0, t);
    return rat_pow(p, -(L1 + L2 + L3)) * measure;
}

Rat theta0(const ThetaArgs& args, ThetaMode mode) {
    Rat tilde = mode == ThetaMode::Formula ? theta_tilde_formula(args)
                                           : theta_tilde_oracle(args);
    return rat_pow(args.p, 4 * args.k + 3 * args.m + args.n) * tilde;
}

Rat theta_full(const ThetaArgs& args, ThetaMode mode) {
    return Rat(theta3(args)) * theta0(args, mode);
}

Rat theta_tilde_e(const std::array<int, 3>& e, long p) {
    const int e1 = e[0], e2 = e[1], e3 = e[2];
    if (e1 < 0 || e2 < 0 || e3 < 0 || 2 * e3 < e2)
        throw OutsideIntegralCone("theta_e: point outside the integrality region");
    const int d = e3 - e2;
    if (d >= 0) return rat_pow(p, e1 - 3 * e2 + 3 * e3) * Rat(f_fast(p, e1, 0, e2));
    if (d >= std::max(-e1, -e3)) {
        if (e1 - 2 * e2 + 2 * e3 >= 0)
            return rat_pow(p, e1 + e2 - e3) *
                   Rat(f_fast(p, e1 - 2 * e2 + 2 * e3, 0, -e2 + 2 * e3));
        return rat_pow(p, 4 * e1 - 5 * e2 + 5 * e3) *
               Rat(f_fast(p, 0, -e1 + 2 * e2 - 2 * e3, -e1 + e2));
    }
    return rat_pow(p, -e1) * Rat(f_fast(p, 0, e1, e1 - e2 + 2 * e3));
}

Rat theta_e(const std::array<int, 3>& e, long p) {
    return rat_pow(p, 13 * e[0] + 2 * e[1] + 26 * e[2]) * theta_tilde_e(e, p);
}

Rat theta_x2(int val_det_a, int val_mu, long p) {
    return rat_pow(p, 10 * val_det_a + 12 * val_mu);
}

// ---------------------------------------------------------------------------
// Twelve-condition oracle over the 7-parameter space
// (beta, b11, b12, b21, c11, c12, c21).
// ---------------------------------------------------------------------------

namespace {

// Variable indices in the digit loop.
enum : int { vBeta = 0, vB11 = 1, vB12 = 2, vB21 = 3, vC11 = 4, vC12 = 5, vC21 = 6 };

struct Term {
    long coef;
    std::vector<int> vars;  // product of these variables
};

struct Condition {
    int rhs;  // v(expr) >= rhs
    std::vector<Term> terms;
};

}  // namespace

Rat twelve_condition_measure(const ThetaArgs& args) {
    const long p = args.p;
    const int k = args.k, m = args.m, n = args.n;

    // Lower valuation bounds for the shift, tightened by the implications
    // v(beta+b11) >= -k-n, v(beta-b11) >= -k-m  =>  v(2 beta), v(2 b11)
    // bounded by the smaller right-hand side (p odd).
    std::array<int, 7> L{};
    L[vBeta] = std::max(-m - n, std::min(-k - n, -k - m));
    L[vB11] = std::max(-m, std::min(-k - n, -k - m));
    L[vB12] = std::max(-m, -k - m);
    L[vB21] = std::max(-n, -k - n);
    const int det_floor = std::min(2 * L[vB11], L[vB12] + L[vB21]);
    L[vC12] = std::min(-k - m, L[vBeta] + L[vB12]);
    L[vC21] = std::min(-k - n, L[vBeta] + L[vB21]);
    L[vC11] = std::min(std::min(-k - n, -k - m), std::min(L[vBeta] + L[vB11], det_floor));

    // The twelve integrality conditions; det B = -b11^2 - b12 b21.
    std::vector<Condition> conds = {
        {-m, {{1, {vB11}}}},
        {-n, {{1, {vB21}}}},
        {-m, {{1, {vB12}}}},
        {-m - n, {{1, {vBeta}}}},
        {-k - n, {{1, {vBeta}}, {1, {vB11}}}},
        {-k - m, {{1, {vBeta}}, {-1, {vB11}}}},
        {-k - m, {{1, {vB12}}}},
        {-k - n, {{1, {vB21}}}},
        {-k - m, {{2, {vC12}}, {1, {vBeta, vB12}}}},
        {-k - n, {{2, {vC21}}, {1, {vBeta, vB21}}}},
        {-k - n, {{2, {vC11}}, {1, {vBeta, vB11}}, {1, {vB11, vB11}}, {1, {vB12, vB21}}}},
        {-k - m, {{-2, {vC11}}, {-1, {vBeta, vB11}}, {1, {vB11, vB11}}, {1, {vB12, vB21}}}},
    };

    // Precision: each condition needs its expression modulo p^{rhs - floor}.
    int M = 0;
    std::vector<int> floor_of(conds.size()), t_of(conds.size());
    for (size_t j = 0; j < conds.size(); ++j) {
        int fl = 0;
        bool first = true;
        for (const Term& term : conds[j].terms) {
            int f = 0;
            for (int v : term.vars) f += L[v];
            fl = first ? f : std::min(fl, f);
            first = false;
        }
        floor_of[j] = fl;
        t_of[j] = std::max(0, conds[j].rhs - fl);
        M = std::max(M, t_of[j]);
    }
    {
        long total = 1;
        for (int i = 0; i < 7 * M; ++i) {
            total *= p;
            if (total > 5000000)
                throw PrecisionOverflow("twelve_condition_measure: p^{7M} > 5e6");
        }
    }

    const long pM = pow_long(p, M);
    std::array<long, 7> u{};
    long count = 0;
    std::vector<long> mod_of(conds.size());
    for (size_t j = 0; j < conds.size(); ++j) mod_of[j] = pow_long(p, t_of[j]);

    // Odometer over the seven digits.
    while (true) {
        bool ok = true;
        for (size_t j = 0; j < conds.size() && ok; ++j) {
            if (t_of[j] == 0) continue;
            long mod = mod_of[j];
            long acc = 0;
            for (const Term& term : conds[j].terms) {
                int f = 0;
                long prod = term.coef % mod;
                for (int v : term.vars) {
                    f += L[v];
                    prod = (prod * (u[v] % mod)) % mod;
                }
                // scale by p^{f - floor_j} >= 1
                for (int s = 0; s < f - floor_of[j]; ++s) prod = (prod * p) % mod;
                acc = (acc + prod) % mod;
            }
            if (acc % mod != 0) ok = false;
        }
        if (ok) ++count;

        int pos = 0;
        while (pos < 7) {
            if (++u[pos] < pM) break;
            u[pos] = 0;
            ++pos;
        }
        if (pos == 7) break;
    }

    int sumL = 0;
    for (int v = 0; v < 7; ++v) sumL += L[v];
    Rat fraction = Rat(count) / Rat(int_pow(p, 7 * M));
    fraction.canonicalize();
    return rat_pow(p, -sumL) * fraction;
}

}  // namespace dstar
