#ifndef MIRRORSERIES_ERRORS_HPP
#define MIRRORSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mirrorseries {

// Base class for everything the library throws on its own behalf.
// Plain argument-contract violations (negative orders, bad flags and the
// like) use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// div() needs a denominator whose constant term is nonzero.
class DivisionByNonUnit : public Error {
public:
    using Error::Error;
};

/// exp_series() and the inner argument of compose() need a zero constant
/// term; q_expand_I3() uses it when the re-expanded period fails to
/// vanish at q = 0.
class NonzeroConstantTerm : public Error {
public:
    using Error::Error;
};

/// log_series() needs a constant term equal to 1.
class ConstantTermNotOne : public Error {
public:
    using Error::Error;
};

/// revert() needs f(0) = 0 and f'(0) != 0.
class NotReversible : public Error {
public:
    using Error::Error;
};

/// A LogSeries product would exceed log-degree 2.
class LogDegreeOverflow : public Error {
public:
    using Error::Error;
};

/// The Yukawa coupling came out with surviving log terms.
class LogTermsDidNotCancel : public Error {
public:
    using Error::Error;
};

/// A stripped coefficient failed to be a non-negative integer where the
/// curve counts are proven (degree <= 8).
class IntegralityFailure : public Error {
public:
    using Error::Error;
};

/// An exact cross-identity between computed quantities broke; always a
/// bug upstream, never valid data.
class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

} // namespace mirrorseries

#endif
