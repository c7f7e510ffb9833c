#include "dstar/factored.hpp"

#include <algorithm>
#include <sstream>

#include "dstar/errors.hpp"

namespace dstar {

FactoredRational::FactoredRational(Monomial prefactor, Polynomial num,
                                   std::vector<DenomFactor> denom)
    : prefactor_(prefactor), numerator_(std::move(num)) {
    for (const auto& f : denom) push_factor(f.m, f.mult);
}

FactoredRational FactoredRational::from_monomial(const Monomial& m) {
    FactoredRational r;
    r.prefactor_ = m;
    return r;
}

FactoredRational FactoredRational::geometric(const Monomial& m) {
    return FactoredRational::one().over(m);
}

void FactoredRational::push_factor(const Monomial& m, int mult) {
    if (m.is_one()) throw InvalidArgs("denominator factor 1 - 1 is zero");
    if (mult <= 0) throw InvalidArgs("denominator multiplicity must be positive");
    auto it = std::find_if(denom_.begin(), denom_.end(),
                           [&](const DenomFactor& f) { return f.m == m; });
    if (it != denom_.end()) {
        it->mult += mult;
    } else {
        denom_.push_back({m, mult});
        std::sort(denom_.begin(), denom_.end(),
                  [](const DenomFactor& a, const DenomFactor& b) { return a.m < b.m; });
    }
}

Polynomial FactoredRational::cleared_denominator() const {
    Polynomial d = Polynomial::one();
    for (const auto& f : denom_) {
        Polynomial factor = Polynomial::one() - Polynomial::from_monomial(f.m);
        d *= factor.pow(static_cast<unsigned>(f.mult));
    }
    return d;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational r;
    r.prefactor_ = prefactor_ * o.prefactor_;
    r.numerator_ = numerator_ * o.numerator_;
    r.denom_ = denom_;
    for (const auto& f : o.denom_) r.push_factor(f.m, f.mult);
    return r;
}

FactoredRational FactoredRational::operator+(const FactoredRational& o) const {
    // Common denominator: per factor the max multiplicity; each numerator is
    // scaled by the factors it is missing.
    FactoredRational r;
    std::vector<DenomFactor> joint = denom_;
    for (const auto& f : o.denom_) {
        auto it = std::find_if(joint.begin(), joint.end(),
                               [&](const DenomFactor& g) { return g.m == f.m; });
        if (it == joint.end())
            joint.push_back(f);
        else
            it->mult = std::max(it->mult, f.mult);
    }
    std::sort(joint.begin(), joint.end(),
              [](const DenomFactor& a, const DenomFactor& b) { return a.m < b.m; });

    auto missing = [&](const std::vector<DenomFactor>& have) {
        Polynomial scale = Polynomial::one();
        for (const auto& f : joint) {
            int mult = f.mult;
            auto it = std::find_if(have.begin(), have.end(),
                                   [&](const DenomFactor& g) { return g.m == f.m; });
            if (it != have.end()) mult -= it->mult;
            if (mult > 0) {
                Polynomial factor = Polynomial::one() - Polynomial::from_monomial(f.m);
                scale *= factor.pow(static_cast<unsigned>(mult));
            }
        }
        return scale;
    };

    r.numerator_ = cleared_numerator() * missing(denom_) +
                   o.cleared_numerator() * missing(o.denom_);
    r.denom_ = joint;
    if (r.numerator_.is_zero()) r.denom_.clear();
    return r;
}

FactoredRational FactoredRational::operator-() const { return scaled(Rat(-1)); }

FactoredRational FactoredRational::operator-(const FactoredRational& o) const {
    return *this + (-o);
}

FactoredRational FactoredRational::scaled(const Rat& c) const {
    FactoredRational r = *this;
    r.numerator_ = r.numerator_.scaled(c);
    if (r.numerator_.is_zero()) {
        r.prefactor_ = Monomial{};
        r.denom_.clear();
    }
    return r;
}

FactoredRational FactoredRational::times_monomial(const Monomial& m) const {
    FactoredRational r = *this;
    r.prefactor_ = r.prefactor_ * m;
    return r;
}

FactoredRational FactoredRational::over(const Monomial& m, int mult) const {
    FactoredRational r = *this;
    r.push_factor(m, mult);
    return r;
}

FactoredRational FactoredRational::substitute(
    const std::array<std::optional<Monomial>, kNumVars>& b) const {
    auto sub_mono = [&](const Monomial& m) {
        Monomial img;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (b[i])
                img = img * b[i]->pow(m.e[i]);
            else
                img.e[i] += m.e[i];
        }
        return img;
    };
    FactoredRational r;
    r.prefactor_ = sub_mono(prefactor_);
    r.numerator_ = numerator_.substitute(b);
    for (const auto& f : denom_) r.push_factor(sub_mono(f.m), f.mult);
    if (r.numerator_.is_zero()) {
        r.prefactor_ = Monomial{};
        r.denom_.clear();
    }
    return r;
}

FactoredRational FactoredRational::invert_vars(const std::vector<Var>& vars) const {
    std::array<std::optional<Monomial>, kNumVars> b{};
    for (Var v : vars) {
        Monomial m;
        m[v] = -1;
        b[static_cast<int>(v)] = m;
    }
    return substitute(b);
}

std::string FactoredRational::str() const {
    std::ostringstream os;
    if (!prefactor_.is_one()) os << mono_str(prefactor_) << " * ";
    os << "(" << numerator_.str() << ")";
    if (!denom_.empty()) {
        os << " / [";
        bool first = true;
        for (const auto& f : denom_) {
            if (!first) os << " ";
            os << "(1 - " << mono_str(f.m) << ")";
            if (f.mult > 1) os << "^" << f.mult;
            first = false;
        }
        os << "]";
    }
    return os.str();
}

bool rational_eq(const FactoredRational& f, const FactoredRational& g) {
    // f_num * g_den == g_num * f_den, all exact Laurent polynomials.
    Polynomial lhs = f.cleared_numerator() * g.cleared_denominator();
    Polynomial rhs = g.cleared_numerator() * f.cleared_denominator();
    return lhs == rhs;
}

FactoredRational frac(Polynomial num, const std::vector<std::pair<Monomial, int>>& denom) {
    std::vector<DenomFactor> d;
    d.reserve(denom.size());
    for (const auto& [m, mult] : denom) d.push_back({m, mult});
    return FactoredRational(Monomial{}, std::move(num), std::move(d));
}

namespace {

// a == c*m*b for a scalar c and monomial m?
std::optional<std::pair<Rat, Monomial>> poly_monomial_ratio(const Polynomial& a,
                                                            const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.size() != b.size()) return std::nullopt;
    const auto& [ma, ca] = *a.terms().begin();
    const auto& [mb, cb] = *b.terms().begin();
    Rat c = ca / cb;
    Monomial m = ma * mb.inverse();
    auto ia = a.terms().begin();
    for (const auto& [mt, ct] : b.terms()) {
        if (ia->first != mt * m || ia->second != ct * c) return std::nullopt;
        ++ia;
    }
    return std::make_pair(c, m);
}

// Wants the first nonzero exponent positive; used to orient (1 - m) factors.
bool needs_flip(const Monomial& m) {
    for (int x : m.e) {
        if (x > 0) return false;
        if (x < 0) return true;
    }
    return false;
}

}  // namespace

FactoredRational FactoredRational::oriented() const {
    // (1 - m) = -m (1 - m^{-1}); flipping a factor of multiplicity k divides
    // the fraction by (-m)^k, which lands in the numerator as (-1)^k m^{-k}.
    FactoredRational r;
    r.prefactor_ = prefactor_;
    r.numerator_ = numerator_;
    for (const auto& f : denom_) {
        if (needs_flip(f.m)) {
            r.push_factor(f.m.inverse(), f.mult);
            r.numerator_ = r.numerator_.times_monomial(f.m.inverse().pow(f.mult));
            if (f.mult % 2 == 1) r.numerator_ = -r.numerator_;
        } else {
            r.push_factor(f.m, f.mult);
        }
    }
    return r;
}

std::optional<std::pair<Rat, Monomial>> monomial_quotient(const FactoredRational& g,
                                                          const FactoredRational& f) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    // Orient all (1 - m) factors the same way; if the denominators then agree
    // as multisets the quotient is read off the numerators alone.
    FactoredRational go = g.oriented();
    FactoredRational fo = f.oriented();
    if (go.denominator() == fo.denominator())
        return poly_monomial_ratio(go.cleared_numerator(), fo.cleared_numerator());
    // Fallback: full cross-multiplication.
    return poly_monomial_ratio(g.cleared_numerator() * f.cleared_denominator(),
                               f.cleared_numerator() * g.cleared_denominator());
}

std::optional<FunEq> funeq_detect(const FactoredRational& f) {
    FactoredRational inv = f.invert_vars({Var::p, Var::t});
    auto q = monomial_quotient(inv, f);
    if (!q) return std::nullopt;
    const auto& [c, m] = *q;
    if (c != 1 && c != -1) return std::nullopt;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (v != Var::p && v != Var::t && m.e[i] != 0) return std::nullopt;
    }
    return FunEq{c < 0 ? 1 : 0, m[Var::p], m[Var::t]};
}

}  // namespace dstar
