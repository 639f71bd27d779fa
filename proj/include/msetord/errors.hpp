#ifndef MSETORD_ERRORS_HPP
#define MSETORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msetord {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value or range bound falls outside the representable range.
struct RangeViolation : Error {
    using Error::Error;
};

/// An operation's stated precondition does not hold (e.g. removing an
/// absent element from a multiset).
struct PreconditionError : Error {
    using Error::Error;
};

/// A model is structurally invalid: empty initial domain, bad variable id,
/// overlapping constraint sides, mismatched lengths.
struct ModelError : Error {
    using Error::Error;
};

/// An API was driven outside its contract (non-LIFO undo, re-used mark).
struct UsageError : Error {
    using Error::Error;
};

/// A brute-force oracle was asked to enumerate beyond its guard.
struct OracleScopeError : Error {
    using Error::Error;
};

/// Malformed instance or problem file.
struct ParseError : Error {
    using Error::Error;
};

} // namespace msetord

#endif
