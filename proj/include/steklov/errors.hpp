// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (e.g. inner radius beyond the
/// first zero of the comparison density).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a formula (e.g. spherical radius >= pi/sqrt(K)).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Curvature data for which a comparison ball does not exist.
class UnsupportedRegimeError : public Error {
public:
    using Error::Error;
};

/// Malformed geometric or numerical input.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Every mode of a Gram matrix fell below the conditioning cutoff.
class NumericalRankError : public Error {
public:
    using Error::Error;
};

}  // namespace steklov
