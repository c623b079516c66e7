#ifndef HAGGE_ERROR_HPP
#define HAGGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hagge {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division with a zero divisor. The message carries the offending
// expression so reports stay debuggable.
struct DivideByZeroError : Error {
    explicit DivideByZeroError(const std::string& expr)
        : Error("division by zero: " + expr) {}
};

// Coincident points, identical lines, zero coordinate triples, collinear
// inputs to a circle fit: anything that makes a construction step singular.
struct DegenerateError : Error {
    using Error::Error;
};

// A point required to lie on a circle does not.
struct NotOnCircleError : Error {
    using Error::Error;
};

// Conjugation requested for a point on a sideline of the reference triangle.
struct OnSidelineError : Error {
    using Error::Error;
};

// A polynomial operation exceeded the active term budget.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed or invalid user input (CLI / bindings). Maps to exit code 2.
struct InputError : Error {
    using Error::Error;
};

}  // namespace hagge

#endif
