#pragma once

#include <stdexcept>
#include <string>

namespace cliffgrass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix/vector shapes do not agree.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A stated precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Input data failed validation (bad string, inhomogeneous relation, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A matrix handed to the triality solver is not in the spin(8) span.
class NotInSpin8Error : public Error {
public:
    explicit NotInSpin8Error(const std::string& msg) : Error(msg) {}
};

/// A matrix does not commute with the standard complex structure.
class NotComplexLinearError : public Error {
public:
    explicit NotComplexLinearError(const std::string& msg) : Error(msg) {}
};

/// Coefficients beyond half dimension contradict Poincare duality.
class DualityError : public Error {
public:
    explicit DualityError(const std::string& msg) : Error(msg) {}
};

}  // namespace cliffgrass
