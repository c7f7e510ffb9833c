#pragma once

#include <map>
#include <string>

#include "dstar/factored.hpp"

namespace dstar {

// Weight of each variable in the series grading. The default measures
// t-degree: t itself has weight 1 and the X-variables carry the t-degree of
// their definitions X1 = p^{14} t^5, X2 = p^2 t, X3 = p^{26} t^9; the
// generating-function variable T also has weight 1.
struct Grading {
    std::array<int, kNumVars> w{};
    int degree(const Monomial& m) const {
        int d = 0;
        for (int i = 0; i < kNumVars; ++i) d += w[i] * m.e[i];
        return d;
    }
    bool operator==(const Grading&) const = default;
};

Grading default_grading();

// A polynomial truncated at a fixed graded order. Coefficients are stored as
// full Laurent polynomials bucketed by degree, so arithmetic is exact and
// truncation is consistent under + and *.
class TruncatedSeries {
public:
    TruncatedSeries(Grading g, int order) : grading_(g), order_(order) {}

    const Grading& grading() const { return grading_; }
    int order() const { return order_; }
    const std::map<int, Polynomial>& coefficients() const { return c_; }

    Polynomial coefficient(int degree) const {
        auto it = c_.find(degree);
        return it == c_.end() ? Polynomial::zero() : it->second;
    }

    void add(const Polynomial& q);
    void add_term(const Monomial& m, const Rat& coef);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rat& c) const;
    TruncatedSeries truncated(int order) const;

    bool operator==(const TruncatedSeries& o) const;

    int min_degree() const;
    std::string str() const;

private:
    Grading grading_;
    int order_;
    std::map<int, Polynomial> c_;
};

// Geometric expansion of a factored rational function through the stated
// order. Every denominator monomial must have strictly positive degree in
// the grading, otherwise the expansion diverges.
TruncatedSeries expand(const FactoredRational& f, int order,
                       const Grading& grading = default_grading());

// Specializes p to a numeric value; each coefficient must then reduce to a
// pure power of the graded variables, and the map degree -> value is
// returned.
std::map<int, Rat> eval_coefficients(const TruncatedSeries& s, long p);

}  // namespace dstar
