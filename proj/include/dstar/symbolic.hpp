#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dstar/rational.hpp"

namespace dstar {

// Fixed variable registry. p is the residue characteristic, t = p^{-s},
// X1/X2/X3 abbreviate the x^3 weight monomials, T and Y are the series
// variables of the point-count generating functions. Keeping the registry
// closed makes monomial equality canonical.
enum class Var : int { p = 0, t = 1, X1 = 2, X2 = 3, X3 = 4, T = 5, Y = 6 };

inline constexpr int kNumVars = 7;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// A Laurent monomial: integer exponents, negative allowed.
struct Monomial {
    std::array<int, kNumVars> e{};

    int& operator[](Var v) { return e[static_cast<int>(v)]; }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }

    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
        return r;
    }

    Monomial pow(int k) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] * k;
        return r;
    }

    auto operator<=>(const Monomial&) const = default;
};

Monomial mono(std::initializer_list<std::pair<Var, int>> exps);

// A Laurent polynomial with exact rational coefficients. Terms are kept in a
// map ordered lexicographically by exponent vector, so equality and printing
// are canonical; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rat& c);
    Polynomial(const Rat& c, const Monomial& m);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rat(1)); }
    static Polynomial variable(Var v, int exp = 1);
    static Polynomial from_monomial(const Monomial& m) { return Polynomial(Rat(1), m); }

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    Polynomial scaled(const Rat& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Exponent-wise substitution var -> monomial for the bound variables.
    Polynomial substitute(const std::array<std::optional<Monomial>, kNumVars>& bindings) const;

    // v -> v^{-1} for every variable that occurs.
    Polynomial invert_all_vars() const;

    // Evaluate with the given numeric bindings; every variable that occurs
    // must be bound.
    Rat eval(const std::array<std::optional<Rat>, kNumVars>& values) const;

    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& q) { return q.scaled(c); }

std::string mono_str(const Monomial& m);

// Parses a polynomial expression: integers, registry variables, '^' with
// (possibly negative) integer exponents, '+', '-', '*', parentheses and
// juxtaposition for products, e.g. "1 - p^2 T^2" or "(1-p)(1-pT)".
Polynomial parse_poly(std::string_view text);

// Parses a single monomial, e.g. "p^3 X1^2 X2^2 X3".
Monomial parse_mono(std::string_view text);

}  // namespace dstar
