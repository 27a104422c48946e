#ifndef RICO_ERRORS_HPP
#define RICO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rico {

// Base class for everything thrown by the library. CLI maps subclasses
// onto exit codes, so keep the taxonomy flat and explicit.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input-contract violations (shape / symmetry / required-structure).
class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
class NonSquare : public DimensionMismatch {
  public:
    explicit NonSquare(const std::string& msg) : DimensionMismatch(msg) {}
};
class SpecInvariantViolated : public DimensionMismatch {
  public:
    explicit SpecInvariantViolated(const std::string& msg) : DimensionMismatch(msg) {}
};

// Numerical failures (algorithm could not deliver its postcondition).
class NumericalError : public Error {
  public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};
class ConvergenceFailure : public NumericalError {
  public:
    explicit ConvergenceFailure(const std::string& msg) : NumericalError(msg) {}
};
class SwapFailure : public NumericalError {
  public:
    explicit SwapFailure(const std::string& msg) : NumericalError(msg) {}
};
class SingularOperator : public NumericalError {
  public:
    explicit SingularOperator(const std::string& msg) : NumericalError(msg) {}
};
class NoStabilizingSolution : public NumericalError {
  public:
    explicit NoStabilizingSolution(const std::string& msg) : NumericalError(msg) {}
};
class IllConditioned : public NumericalError {
  public:
    explicit IllConditioned(const std::string& msg) : NumericalError(msg) {}
};
class UnstableSystem : public NumericalError {
  public:
    explicit UnstableSystem(const std::string& msg) : NumericalError(msg) {}
};
class PoleAtS : public NumericalError {
  public:
    explicit PoleAtS(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace rico

#endif
