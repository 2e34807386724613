#pragma once

#include <stdexcept>
#include <string>

namespace struvebound {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A plain (unscaled) result would not fit in a double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A series, continued fraction or quadrature hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bound was evaluated outside the hypotheses under which it is asserted.
/// what() names the failed hypothesis.
class ValidityError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace struvebound
