#pragma once

#include <stdexcept>
#include <string>

namespace tribell {

// All-zero amplitude vector passed to a state constructor.
struct ZeroVectorError : std::invalid_argument {
    explicit ZeroVectorError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested measurement outcome has (numerically) zero probability, so the
// post-measurement state is undefined.
struct OutcomeImpossibleError : std::domain_error {
    explicit OutcomeImpossibleError(const std::string& what) : std::domain_error(what) {}
};

// The linear-program solver hit its pivot cap without reaching a decision.
struct NumericalFailureError : std::runtime_error {
    explicit NumericalFailureError(const std::string& what) : std::runtime_error(what) {}
};

// Finite-difference check requested at a point where the objective's
// absolute value makes the derivative ill-defined.
struct NonSmoothPointError : std::domain_error {
    explicit NonSmoothPointError(const std::string& what) : std::domain_error(what) {}
};

} // namespace tribell
