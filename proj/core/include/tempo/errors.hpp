#ifndef TEMPO_ERRORS_HPP
#define TEMPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tempo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition broken by the caller (dimension mismatch, bad argument).
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Requested capability is not provided (order out of range, metric
// unavailable for the problem).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Malformed configuration input (tableau files, data files, experiment specs).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Relative energy error is undefined because H(y0) == 0; callers fall
// back to the absolute error H(y) - H(y0) and flag it in the record.
class ZeroEnergyReference : public Error {
public:
    using Error::Error;
};

// Not enough usable data for a growth-exponent fit.
class FitFailure : public Error {
public:
    using Error::Error;
};

// Stage solver failed to converge.
class SolverFailure : public Error {
public:
    SolverFailure(const std::string& what, int iterations, double residual)
        : Error(what), iterations(iterations), residual(residual) {}
    int iterations;
    double residual;
};

// A time step could not be completed.
class StepFailure : public Error {
public:
    StepFailure(const std::string& what, long step_index, int iterations, double residual)
        : Error(what), step_index(step_index), iterations(iterations), residual(residual) {}
    long step_index;
    int iterations;
    double residual;
};

}  // namespace tempo

#endif
