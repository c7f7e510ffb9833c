#include "dstar/json_io.hpp"

#include <json.hpp>
#include <sstream>

#include "dstar/errors.hpp"

namespace dstar {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json mono_to_json(const Monomial& m) {
    ordered_json j = ordered_json::object();
    for (int i = 0; i < kNumVars; ++i)
        if (m.e[i] != 0) j[var_name(static_cast<Var>(i))] = m.e[i];
    return j;
}

Monomial mono_from_json(const ordered_json& j) {
    Monomial m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto v = var_from_name(it.key());
        if (!v) throw ParseError("unknown variable in JSON monomial: " + it.key());
        m[*v] = it.value().get<int>();
    }
    return m;
}

ordered_json poly_to_json(const Polynomial& q) {
    ordered_json arr = ordered_json::array();
    for (const auto& [m, c] : q.terms()) {
        ordered_json term;
        term["coeff"] = c.get_str();
        term["monomial"] = mono_to_json(m);
        arr.push_back(term);
    }
    return arr;
}

Polynomial poly_from_json(const ordered_json& arr) {
    Polynomial q;
    for (const auto& term : arr) {
        Rat c(term.at("coeff").get<std::string>());
        c.canonicalize();
        q.add_term(mono_from_json(term.at("monomial")), c);
    }
    return q;
}

}  // namespace

std::string rational_to_json(const FactoredRational& f) {
    ordered_json j;
    j["type"] = "rational_function";
    j["prefactor"] = mono_to_json(f.prefactor());
    j["numerator"] = poly_to_json(f.numerator());
    ordered_json den = ordered_json::array();
    for (const auto& d : f.denominator()) {
        ordered_json fac;
        fac["monomial"] = mono_to_json(d.m);
        fac["multiplicity"] = d.mult;
        den.push_back(fac);
    }
    j["denominator"] = den;
    return j.dump();
}

FactoredRational rational_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("type") != "rational_function")
        throw ParseError("expected a rational_function document");
    std::vector<DenomFactor> den;
    for (const auto& fac : j.at("denominator"))
        den.push_back({mono_from_json(fac.at("monomial")),
                       fac.at("multiplicity").get<int>()});
    return FactoredRational(mono_from_json(j.at("prefactor")),
                            poly_from_json(j.at("numerator")), std::move(den));
}

std::string series_to_json(const TruncatedSeries& s) {
    ordered_json j;
    j["type"] = "series";
    j["order"] = s.order();
    ordered_json grading = ordered_json::object();
    for (int i = 0; i < kNumVars; ++i)
        if (s.grading().w[i] != 0) grading[var_name(static_cast<Var>(i))] = s.grading().w[i];
    j["grading"] = grading;
    ordered_json coeffs = ordered_json::object();
    for (const auto& [d, q] : s.coefficients()) coeffs[std::to_string(d)] = poly_to_json(q);
    j["coefficients"] = coeffs;
    return j.dump();
}

std::string numeric_series_to_json(const std::map<int, Rat>& coeffs) {
    ordered_json j;
    j["type"] = "series";
    ordered_json c = ordered_json::object();
    for (const auto& [d, v] : coeffs) c[std::to_string(d)] = v.get_str();
    j["coefficients"] = c;
    return j.dump();
}

std::string mono_latex(const Monomial& m) {
    // (p,t) part prints in the p^{b-cs} convention.
    const int b = m[Var::p], c = m[Var::t];
    std::ostringstream os;
    bool emitted = false;
    if (b != 0 || c != 0) {
        os << "p^{";
        if (c == 0) {
            os << b;
        } else {
            if (b != 0) os << b;
            if (c == 1)
                os << "-s";
            else if (c == -1)
                os << "+s";
            else if (c > 0)
                os << "-" << c << "s";
            else
                os << "+" << -c << "s";
        }
        os << "}";
        emitted = true;
    }
    static const Var rest[] = {Var::X1, Var::X2, Var::X3, Var::T, Var::Y};
    static const char* names[] = {"X_1", "X_2", "X_3", "T", "Y"};
    for (int i = 0; i < 5; ++i) {
        int e = m[rest[i]];
        if (e == 0) continue;
        os << names[i];
        if (e != 1) os << "^{" << e << "}";
        emitted = true;
    }
    if (!emitted) return "1";
    return os.str();
}

std::string poly_latex(const Polynomial& q) {
    if (q.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : q.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << mono_latex(m);
        }
        first = false;
    }
    return os.str();
}

std::string rational_latex(const FactoredRational& f) {
    std::ostringstream num;
    if (!f.prefactor().is_one()) num << mono_latex(f.prefactor()) << "\\,";
    bool wrap = !f.prefactor().is_one() && f.numerator().size() > 1;
    num << (wrap ? "\\left(" : "") << poly_latex(f.numerator()) << (wrap ? "\\right)" : "");
    if (f.denominator().empty()) return num.str();
    std::ostringstream den;
    for (const auto& d : f.denominator()) {
        den << "(1-" << mono_latex(d.m) << ")";
        if (d.mult != 1) den << "^{" << d.mult << "}";
    }
    return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

}  // namespace dstar
