#pragma once

#include <stdexcept>
#include <string>

namespace bfun {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values built over different variable counts were combined.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

/// A univariate polynomial did not split into rational linear factors.
/// Valid b-functions always split, so this signals a solver bug or invalid input.
class IrreducibleRemainder : public Error {
public:
    using Error::Error;
};

/// The ansatz search ran out of room; carries the bounds that were tried.
class BoundsExhausted : public Error {
public:
    BoundsExhausted(const std::string& msg, unsigned order, unsigned coeff_degree,
                    unsigned s_degree, unsigned b_degree)
        : Error(msg), order(order), coeff_degree(coeff_degree),
          s_degree(s_degree), b_degree(b_degree) {}
    unsigned order;
    unsigned coeff_degree;
    unsigned s_degree;
    unsigned b_degree;
};

/// -1 was required to be a root (reduction, shifting, minimal exponent) but is not.
class MissingRootMinusOne : public Error {
public:
    using Error::Error;
};

/// An operation restricted to the unshifted case m = 0 was called with m != 0.
class NonzeroShift : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition on its inputs does not hold.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// A geometric hypothesis (reducedness, smooth strict transform, exceptional
/// records present) required by a bound does not hold for the given table.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

/// The zero polynomial was passed where a nonzero one is required.
class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// A polynomial that must vanish at the origin does not.
class NonvanishingAtOrigin : public Error {
public:
    using Error::Error;
};

/// A Newton polygon face polynomial has a torus critical point.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// The input polynomial is not square-free.
class NonReduced : public Error {
public:
    using Error::Error;
};

/// A problem description failed schema validation; carries the offending field path.
class SchemaError : public Error {
public:
    SchemaError(const std::string& msg, std::string field_path)
        : Error(msg + " (at " + field_path + ")"), field(std::move(field_path)) {}
    std::string field;
};

} // namespace bfun
