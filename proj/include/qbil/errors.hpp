// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qbil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the region where a series or identity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A gamma function or Pochhammer denominator hits a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Power or logarithm requested at the branch point 0.
class BranchPointError : public Error {
 public:
  using Error::Error;
};

/// The term or factor budget ran out before the requested tolerance.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Formal series whose leading coefficient vanishes.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Truncation orders or valuations do not support the requested order.
class PrecisionContractError : public Error {
 public:
  using Error::Error;
};

/// Too few data points for the requested extrapolation order.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or option value.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbil
