#include "dstar/series.hpp"

#include <sstream>

#include "dstar/errors.hpp"

namespace dstar {

Grading default_grading() {
    Grading g;
    g.w[static_cast<int>(Var::t)] = 1;
    g.w[static_cast<int>(Var::X1)] = 5;
    g.w[static_cast<int>(Var::X2)] = 1;
    g.w[static_cast<int>(Var::X3)] = 9;
    g.w[static_cast<int>(Var::T)] = 1;
    return g;
}

void TruncatedSeries::add_term(const Monomial& m, const Rat& coef) {
    int d = grading_.degree(m);
    if (d > order_) return;
    auto it = c_.find(d);
    if (it == c_.end()) {
        Polynomial q;
        q.add_term(m, coef);
        if (!q.is_zero()) c_[d] = std::move(q);
    } else {
        it->second.add_term(m, coef);
        if (it->second.is_zero()) c_.erase(it);
    }
}

void TruncatedSeries::add(const Polynomial& q) {
    for (const auto& [m, coef] : q.terms()) add_term(m, coef);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (!(grading_ == o.grading_)) throw InvalidArgs("series gradings differ");
    TruncatedSeries r(grading_, std::min(order_, o.order_));
    for (const auto& [d, q] : c_)
        if (d <= r.order_) r.c_[d] = q;
    for (const auto& [d, q] : o.c_) {
        if (d > r.order_) continue;
        auto it = r.c_.find(d);
        if (it == r.c_.end()) {
            r.c_[d] = q;
        } else {
            it->second += q;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + o.scaled(Rat(-1));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (!(grading_ == o.grading_)) throw InvalidArgs("series gradings differ");
    TruncatedSeries r(grading_, std::min(order_, o.order_));
    for (const auto& [d1, q1] : c_) {
        for (const auto& [d2, q2] : o.c_) {
            if (d1 + d2 > r.order_) continue;
            Polynomial prod = q1 * q2;
            auto it = r.c_.find(d1 + d2);
            if (it == r.c_.end()) {
                if (!prod.is_zero()) r.c_[d1 + d2] = std::move(prod);
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
    TruncatedSeries r(grading_, order_);
    if (c == 0) return r;
    for (const auto& [d, q] : c_) r.c_[d] = q.scaled(c);
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries r(grading_, order);
    for (const auto& [d, q] : c_)
        if (d <= order) r.c_[d] = q;
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return grading_ == o.grading_ && order_ == o.order_ && c_ == o.c_;
}

int TruncatedSeries::min_degree() const {
    return c_.empty() ? 0 : c_.begin()->first;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << "O(" << order_ << "):";
    for (const auto& [d, q] : c_) os << "\n  [" << d << "] " << q.str();
    return os.str();
}

TruncatedSeries expand(const FactoredRational& f, int order, const Grading& grading) {
    // A numerator reaching below degree 0 widens the working window; the
    // geometric factors themselves only raise degrees.
    Polynomial num = f.cleared_numerator();
    int min_deg = 0;
    for (const auto& [m, c] : num.terms()) min_deg = std::min(min_deg, grading.degree(m));
    const int ext = order - min_deg;

    TruncatedSeries s(grading, ext);
    s.add(num);
    for (const auto& fac : f.denominator()) {
        int d = grading.degree(fac.m);
        if (d <= 0)
            throw NonConvergentFactor("denominator factor (1 - " + mono_str(fac.m) +
                                      ") has grading degree " + std::to_string(d));
        // 1/(1-m)^k = sum_j C(j+k-1, k-1) m^j.
        TruncatedSeries geo(grading, ext);
        Int binom(1);
        for (int j = 0; j * d <= ext - s.min_degree(); ++j) {
            if (j > 0) {
                binom *= fac.mult + j - 1;
                binom /= j;
            }
            geo.add_term(fac.m.pow(j), Rat(binom));
        }
        s = s * geo;
    }
    return s.truncated(order);
}

std::map<int, Rat> eval_coefficients(const TruncatedSeries& s, long p) {
    std::array<std::optional<Rat>, kNumVars> values{};
    values[static_cast<int>(Var::p)] = Rat(p);
    // Graded variables evaluate to 1; the degree key carries their weight.
    for (int i = 0; i < kNumVars; ++i)
        if (s.grading().w[i] != 0) values[i] = Rat(1);
    std::map<int, Rat> out;
    for (const auto& [d, q] : s.coefficients()) {
        Rat v = q.eval(values);
        if (v != 0) out[d] = v;
    }
    return out;
}

}  // namespace dstar
