#include "dstar/symbolic.hpp"

#include <cctype>
#include <sstream>

#include "dstar/errors.hpp"

namespace dstar {

namespace {
constexpr const char* kVarNames[kNumVars] = {"p", "t", "X1", "X2", "X3", "T", "Y"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

Monomial mono(std::initializer_list<std::pair<Var, int>> exps) {
    Monomial m;
    for (const auto& [v, e] : exps) m[v] += e;
    return m;
}

Polynomial::Polynomial(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

Polynomial::Polynomial(const Rat& c, const Monomial& m) {
    if (c != 0) terms_[m] = c;
}

Polynomial Polynomial::variable(Var v, int exp) {
    Monomial m;
    m[v] = exp;
    return Polynomial(Rat(1), m);
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& [m1, c] : terms_) r.terms_[m1 * m] = c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::one();
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

Polynomial Polynomial::substitute(
    const std::array<std::optional<Monomial>, kNumVars>& bindings) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial img;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (bindings[i]) {
                img = img * bindings[i]->pow(m.e[i]);
            } else {
                img.e[i] += m.e[i];
            }
        }
        r.add_term(img, c);
    }
    return r;
}

Polynomial Polynomial::invert_all_vars() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.inverse(), c);
    return r;
}

Rat Polynomial::eval(const std::array<std::optional<Rat>, kNumVars>& values) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!values[i])
                throw InvalidArgs(std::string("eval: unbound variable ") +
                                  kVarNames[i]);
            const Rat& v = *values[i];
            Rat power(1);
            Rat base = m.e[i] > 0 ? v : Rat(1) / v;
            for (int k = 0; k < std::abs(m.e[i]); ++k) power *= base;
            term *= power;
        }
        total += term;
    }
    return total;
}

std::string mono_str(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << " ";
        os << kVarNames[i];
        if (m.e[i] != 1) os << "^" << m.e[i];
        first = false;
    }
    return os.str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << " ";
            os << mono_str(m);
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser: recursive descent over +,-,juxtaposition,^,(),integers.
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Polynomial parse() {
        Polynomial r = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg +
                         " in \"" + std::string(s_) + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial r = parse_product();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            if (eat('+')) {
                r += parse_product();
            } else if (eat('-')) {
                r -= parse_product();
            } else {
                break;
            }
        }
        return r;
    }

    Polynomial parse_product() {
        Polynomial r = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                eat('*');
                r *= parse_factor();
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                r *= parse_factor();
            } else {
                break;
            }
        }
        return r;
    }

    long parse_integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    Polynomial parse_factor() {
        skip_ws();
        Polynomial base;
        if (eat('(')) {
            base = parse_sum();
            if (!eat(')')) fail("expected ')'");
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            base = Polynomial(Rat(parse_integer()));
        } else if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto v = var_from_name(s_.substr(start, pos_ - start));
            if (!v) fail("unknown variable");
            base = Polynomial::variable(*v);
        } else {
            fail("expected factor");
        }
        if (eat('^')) {
            bool braced = eat('{');
            long k = parse_integer();
            if (braced && !eat('}')) fail("expected '}'");
            if (k >= 0) {
                base = base.pow(static_cast<unsigned>(k));
            } else {
                if (!base.is_monomial())
                    fail("negative exponent requires a monomial base");
                const auto& [m, c] = *base.terms().begin();
                if (c != 1) fail("negative exponent requires coefficient 1");
                base = Polynomial::from_monomial(m.pow(static_cast<int>(k)));
            }
        }
        return base;
    }
};

}  // namespace

Polynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Monomial parse_mono(std::string_view text) {
    Polynomial q = parse_poly(text);
    if (!q.is_monomial() || q.terms().begin()->second != 1)
        throw ParseError("not a monomial: " + std::string(text));
    return q.terms().begin()->first;
}

}  // namespace dstar
