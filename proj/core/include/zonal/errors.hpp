#pragma once

#include <stdexcept>
#include <string>

namespace zonal {

// Every failure raised by the library derives from Error so callers can
// separate numeric failures from usage mistakes with one catch.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the evaluation domain (|z| >= 1, pole of Gamma, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Kernel or routine parameters violate their invariants.
class ParameterError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class UnsupportedKernelError : public Error {
public:
    using Error::Error;
};

// Discarded imaginary parts or other sanity checks exceeded their bounds.
class NumericalHealthError : public Error {
public:
    using Error::Error;
};

class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// b_n is resolvable while a_n is at noise level, so b_n / a_n is unbounded.
class IndeterminateError : public Error {
public:
    using Error::Error;
};

class LossOfPrecisionError : public Error {
public:
    using Error::Error;
};

class NonconvergenceError : public Error {
public:
    using Error::Error;
};

// The evaluation grid left after the cancellation guard is too small.
class GuardError : public Error {
public:
    using Error::Error;
};

} // namespace zonal
