#ifndef TEMPO_STEPPER_HPP
#define TEMPO_STEPPER_HPP

#include <string>

#include "tempo/problem.hpp"
#include "tempo/types.hpp"

namespace tempo {

// Stage solver settings shared by all implicit steppers.
// The fixed-point iteration stops when the max-norm of successive
// iterates drops below tolerance * (1 + max-norm of the iterate).
struct SolverConfig {
    int max_iterations = 50;
    double tolerance = 1e-14;
    bool use_newton = false;  // Newton with finite-difference Jacobian
};

// Uniform time-marching interface. A stepper owns per-run mutable
// workspace: one instance per run, never shared, but distinct
// instances may advance distinct runs concurrently.
class Stepper {
public:
    virtual ~Stepper() = default;

    virtual std::string name() const = 0;

    // Binds the stepper to a problem and a fixed step size and resets
    // its internal state to y0 (for multi-value methods this builds the
    // full input vector).
    virtual void start(const OdeProblem& problem, double h) = 0;

    // Advances the internal state across [t, t+h].
    // Throws StepFailure when the stage solve does not converge or the
    // state leaves the finite range.
    virtual void advance(double t) = 0;

    // Current approximation of y at the last completed step.
    virtual const StateVector& current() const = 0;

    // Cumulative stage-solver iterations since start().
    virtual long solver_iterations() const = 0;
};

}  // namespace tempo

#endif
