#pragma once

#include <stdexcept>
#include <string>

namespace sepdim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A product vector with a zero factor where one is not allowed.
struct DegenerateVector : Error {
    using Error::Error;
};

/// A local operation that must be invertible is singular.
struct SingularLocalOp : Error {
    using Error::Error;
};

/// An operation that certifies ranks was handed float data.
struct ExactKindRequired : Error {
    using Error::Error;
};

/// Input state is not fixed by every partial transpose.
struct NotGInvariant : Error {
    using Error::Error;
};

/// Input state has a negative partial transpose.
struct NotPPT : Error {
    using Error::Error;
};

/// A float pipeline left the numerical tolerance envelope.
struct NumericalFailure : Error {
    using Error::Error;
};

/// Mismatched dimensions, malformed shapes, bad indices.
struct ShapeError : Error {
    using Error::Error;
};

/// Malformed input file or JSON document.
struct ParseError : Error {
    using Error::Error;
};

} // namespace sepdim
