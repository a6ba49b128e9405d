#pragma once

#include <stdexcept>
#include <string>

namespace moescale {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An architecture description violates its invariants.
class InvalidConfigError : public Error {
    using Error::Error;
};

/// No integer-expert architecture can meet the requested target.
class NoFeasibleConfigError : public Error {
    using Error::Error;
};

/// Integer arithmetic would overflow 64 bits.
class RangeError : public Error {
    using Error::Error;
};

/// A run table could not be parsed or violates a record invariant.
class LoadError : public Error {
    using Error::Error;
};

/// A regression design matrix is rank deficient.
class SingularFitError : public Error {
    using Error::Error;
};

/// Too few records (or too little variation) for the requested fit.
class InsufficientDataError : public Error {
    using Error::Error;
};

/// A model evaluation produced a non-finite value.
class EvaluationError : public Error {
    using Error::Error;
};

/// The optimizer could not make progress.
class OptimizerError : public Error {
    using Error::Error;
};

}  // namespace moescale
