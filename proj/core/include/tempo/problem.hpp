#ifndef TEMPO_PROBLEM_HPP
#define TEMPO_PROBLEM_HPP

#include <functional>
#include <string>

#include "tempo/types.hpp"

namespace tempo {

// First-order ODE system y' = f(t, y) with optional Hamiltonian, exact
// solution and separable split. Immutable after construction and safe
// to share across concurrent runs; the right-hand side must be pure.
struct OdeProblem {
    std::string name;
    int dimension = 0;
    double t0 = 0.0;
    StateVector y0;

    // f(t, y) -> dydt, dydt preallocated to `dimension`.
    std::function<void(double, const StateVector&, StateVector&)> rhs;

    // Total energy H(y); empty when the problem has no known invariant.
    std::function<double(const StateVector&)> hamiltonian;

    // Exact solution y(t); empty when unavailable.
    std::function<StateVector(double)> exact;

    // Separable Hamiltonian split H = T(p) + V(q): gradient of V with
    // respect to q (length n) and gradient of T with respect to p
    // (length n). Both empty for non-separable/generic problems.
    std::function<StateVector(const StateVector&)> grad_potential;
    std::function<StateVector(const StateVector&)> grad_kinetic;

    bool has_hamiltonian() const { return static_cast<bool>(hamiltonian); }
    bool has_exact() const { return static_cast<bool>(exact); }
    bool has_split() const { return grad_potential && grad_kinetic; }
};

// Convenience allocating evaluation of the right-hand side.
StateVector evaluate_rhs(const OdeProblem& problem, double t, const StateVector& y);

// Evaluates (p', q') = (-grad_q V, grad_p T) through the separable split
// when the problem provides one; otherwise delegates to rhs at t0.
// Both routes agree to machine precision for the shipped problems.
StateVector evaluate_split_rhs(const OdeProblem& problem, const StateVector& y);

// Signed relative energy error (H(y) - e0) / e0.
// Throws ZeroEnergyReference when e0 == 0; callers then record the
// absolute error H(y) - e0 and set the corresponding flag.
double energy_error(const OdeProblem& problem, const StateVector& y, double e0);

// Euclidean norm of y - exact(t) over all components.
double global_error(const OdeProblem& problem, double t, const StateVector& y);

}  // namespace tempo

#endif
