#pragma once

#include <stdexcept>
#include <string>

namespace lognet {

// Input lies outside the domain of an operation (sigma <= 0, theta2 >= 0, x <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// theta1 == 0 (equivalently mu == 0): the phase chart P = 2*theta2/theta1 is undefined.
class ChartSingularity : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed argument that is not a point of the manifold (step <= 0, non-finite angle, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// (alpha, xi) does not satisfy |alpha|^2 - |xi|^2 = 1.
class InvalidElement : public DomainError {
public:
    using DomainError::DomainError;
};

class NumericalSingularity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lognet
