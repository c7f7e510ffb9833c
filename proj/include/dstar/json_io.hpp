#pragma once

#include <map>
#include <string>

#include "dstar/series.hpp"

namespace dstar {

// Canonical JSON for rational functions and series: terms sorted
// lexicographically by exponent vector, variables in registry order,
// integers and rationals as decimal strings. Parsing an emitted document
// and re-emitting it is byte-identical.
std::string rational_to_json(const FactoredRational& f);
FactoredRational rational_from_json(const std::string& text);

std::string series_to_json(const TruncatedSeries& s);
std::string numeric_series_to_json(const std::map<int, Rat>& coeffs);

// LaTeX in the factored display style: a (p,t) monomial p^b t^c prints as
// p^{b-cs}, X-variables by name.
std::string mono_latex(const Monomial& m);
std::string poly_latex(const Polynomial& q);
std::string rational_latex(const FactoredRational& f);

}  // namespace dstar
