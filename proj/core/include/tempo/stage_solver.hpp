#ifndef TEMPO_STAGE_SOLVER_HPP
#define TEMPO_STAGE_SOLVER_HPP

#include <functional>
#include <span>

#include "tempo/stepper.hpp"
#include "tempo/types.hpp"

namespace tempo {

struct FixedPointResult {
    StateVector value;
    int iterations = 0;
    double last_delta = 0.0;
};

// Iterates u <- map(u) until the max-norm of successive iterates falls
// below config.tolerance * (1 + max_norm(u)). Never returns silently on
// failure: throws SolverFailure when the iteration cap is reached.
FixedPointResult solve_stage_fixed_point(
    const std::function<StateVector(const StateVector&)>& map,
    StateVector guess,
    const SolverConfig& config);

// Newton iteration on residual(u) = 0 with a finite-difference Jacobian.
// Same stopping rule (on the Newton update) and failure contract as the
// fixed-point solver. Returns iterations via `iterations_out` when given.
StateVector solve_stages_newton(
    const std::function<StateVector(const StateVector&)>& residual,
    StateVector guess,
    const SolverConfig& config,
    int* iterations_out = nullptr);

namespace detail {

// In-place dense LU solve with partial pivoting; A is overwritten.
// Returns false when A is numerically singular.
bool lu_solve(Matrix& a, std::span<double> b);

}  // namespace detail

}  // namespace tempo

#endif
