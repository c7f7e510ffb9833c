#pragma once

#include <stdexcept>
#include <string>

namespace dstar {

struct NonConvergentFactor : std::runtime_error {
    explicit NonConvergentFactor(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct NonTraceless : std::runtime_error {
    explicit NonTraceless(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionOverflow : std::runtime_error {
    explicit PrecisionOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgs : std::runtime_error {
    explicit InvalidArgs(const std::string& what) : std::runtime_error(what) {}
};

struct OddPrimeRequired : std::runtime_error {
    explicit OddPrimeRequired(const std::string& what) : std::runtime_error(what) {}
};

struct NotSimple : std::runtime_error {
    explicit NotSimple(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateGenerators : std::runtime_error {
    explicit DegenerateGenerators(const std::string& what) : std::runtime_error(what) {}
};

struct OutsideIntegralCone : std::runtime_error {
    explicit OutsideIntegralCone(const std::string& what) : std::runtime_error(what) {}
};

struct NoFunctionalEquation : std::runtime_error {
    explicit NoFunctionalEquation(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dstar
