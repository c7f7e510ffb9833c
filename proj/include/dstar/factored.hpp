#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dstar/symbolic.hpp"

namespace dstar {

// One denominator factor (1 - m)^mult.
struct DenomFactor {
    Monomial m;
    int mult = 1;
    bool operator==(const DenomFactor&) const = default;
};

// A rational function kept in the display shape of the zeta formulas:
//
//     prefactor * numerator / prod_i (1 - m_i)^{mult_i}
//
// The denominator is never expanded except when cross-multiplying for
// equality. Equality of two values is decided by exact polynomial identity,
// never by numeric evaluation.
class FactoredRational {
public:
    FactoredRational() : numerator_(Polynomial::one()) {}
    explicit FactoredRational(Polynomial num) : numerator_(std::move(num)) {}
    FactoredRational(Monomial prefactor, Polynomial num, std::vector<DenomFactor> denom);

    static FactoredRational zero() { return FactoredRational(Polynomial::zero()); }
    static FactoredRational one() { return FactoredRational(Polynomial::one()); }
    static FactoredRational from_monomial(const Monomial& m);
    // 1 / (1 - m)
    static FactoredRational geometric(const Monomial& m);

    const Monomial& prefactor() const { return prefactor_; }
    const Polynomial& numerator() const { return numerator_; }
    const std::vector<DenomFactor>& denominator() const { return denom_; }

    bool is_zero() const { return numerator_.is_zero(); }

    // prefactor * numerator as a single polynomial.
    Polynomial cleared_numerator() const { return numerator_.times_monomial(prefactor_); }
    // prod (1 - m_i)^{mult_i} expanded.
    Polynomial cleared_denominator() const;

    FactoredRational operator+(const FactoredRational& o) const;
    FactoredRational operator-(const FactoredRational& o) const;
    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational operator-() const;

    FactoredRational scaled(const Rat& c) const;
    FactoredRational times_monomial(const Monomial& m) const;
    // Appends (1 - m)^mult to the denominator.
    FactoredRational over(const Monomial& m, int mult = 1) const;

    FactoredRational substitute(const std::array<std::optional<Monomial>, kNumVars>& b) const;
    // v -> v^{-1} for the given variables (all occurrences).
    FactoredRational invert_vars(const std::vector<Var>& vars) const;

    // Rewrites every denominator factor so its monomial has positive leading
    // exponent, via (1 - m) = -m (1 - m^{-1}).
    FactoredRational oriented() const;

    std::string str() const;

private:
    Monomial prefactor_;
    Polynomial numerator_;
    std::vector<DenomFactor> denom_;  // sorted by monomial

    void push_factor(const Monomial& m, int mult);
};

// True iff f and g agree as rational functions (cross-multiplied identity).
bool rational_eq(const FactoredRational& f, const FactoredRational& g);

// Builds num / prod (1 - m_i)^{mult_i} from parsed pieces.
FactoredRational frac(Polynomial num, const std::vector<std::pair<Monomial, int>>& denom);

// Decides whether g == c * m * f for a scalar c and monomial m, by clearing
// denominators and comparing term ratios; returns (c, m) if so. Complete for
// monomial factors; no polynomial factorization involved.
std::optional<std::pair<Rat, Monomial>> monomial_quotient(const FactoredRational& g,
                                                          const FactoredRational& f);

// Functional-equation detector in the (p, t) plane: finds (a, b, c) with
// f(p^{-1}, t^{-1}) = (-1)^a p^b t^c f(p, t), if such a monomial factor
// exists.
struct FunEq {
    int parity;  // a in (-1)^a
    int b;       // exponent of p
    int c;       // exponent of t
};
std::optional<FunEq> funeq_detect(const FactoredRational& f);

}  // namespace dstar
