#pragma once

#include <stdexcept>
#include <string>

namespace liegauge {

// Base class for all domain errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error {
    using Error::Error;
};
struct InvalidRank : Error {
    using Error::Error;
};
struct MaximalRoot : Error {
    using Error::Error;
};
struct NotInLieAlgebra : Error {
    using Error::Error;
};
struct SingularGauge : Error {
    using Error::Error;
};
struct UnsupportedShape : Error {
    using Error::Error;
};
struct NonTermination : Error {
    using Error::Error;
};
struct OutOfScope : Error {
    using Error::Error;
};
struct VerificationFailed : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace liegauge
