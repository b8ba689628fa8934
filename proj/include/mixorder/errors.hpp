#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mixorder {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A distribution or model parameter is outside its admissible range.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// An argument lies outside the domain of the function (negative x, u outside (0,1]).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Vector or matrix sizes do not agree.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A stated precondition of an evaluator does not hold.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Floating-point evaluation broke down. Carries the abscissa where it happened.
class NumericalError : public Error {
  public:
    NumericalError(const std::string& what, std::optional<double> witness = std::nullopt)
        : Error(what), witness_(witness) {}

    std::optional<double> witness() const { return witness_; }

  private:
    std::optional<double> witness_;
};

/// Quantile bracketing ran past the heavy-tail guard.
class TailError : public Error {
  public:
    TailError(const std::string& what, double level) : Error(what), level_(level) {}

    double level() const { return level_; }

  private:
    double level_;
};

/// A scenario or report document is malformed. The message names the offending key.
class FormatError : public Error {
  public:
    using Error::Error;
};

/// The quantile integral looks divergent, so a Lorenz curve is not defined.
class InfiniteMeanSuspected : public Error {
  public:
    using Error::Error;
};

}  // namespace mixorder
