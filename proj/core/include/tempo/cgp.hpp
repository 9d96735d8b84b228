#ifndef TEMPO_CGP_HPP
#define TEMPO_CGP_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tempo/stepper.hpp"
#include "tempo/types.hpp"

namespace tempo {

// Continuous Galerkin-Petrov time stepping of order k.
//
// On each interval the solution is a degree-k polynomial through stage
// values U^0..U^k at the mapped Gauss-Lobatto points, continuous across
// intervals (U^0 of a step equals U^k of the previous one, bitwise).
// Testing against a degree-(k-1) space and applying the (k+1)-point
// Lobatto rule to the right-hand side yields, per step, the k stage
// equations
//
//     sum_j alpha(i,j) U^j = (h/2) sum_mu beta(i,mu) F(t_mu, U^mu)
//
// on the reference interval [-1,1]. The trial basis is Lagrange at the
// Lobatto nodes, so gamma (trial basis values at the nodes) is the
// identity. The test basis is chosen so the system is upper triangular
// in the unknowns: the last equation is the update rule
// U^k = U^0 + (h/2) sum_mu w_mu F^mu, and equation i < k-1 pins the
// interior value U^{i+1} directly.
struct CgpCoefficients {
    int order = 0;                 // k
    std::vector<double> nodes;     // k+1 Lobatto nodes on [-1,1]
    std::vector<double> weights;   // Lobatto weights, sum 2
    Matrix alpha;                  // k x (k+1)
    Matrix beta;                   // k x (k+1)
    Matrix gamma;                  // (k+1) x (k+1), identity
};

// Assembles the coefficient tables for order k. k = 1 is the
// trapezoidal (Crank-Nicolson) scheme, k = 2 the Simpson-rule scheme;
// k = 3 is the highest shipped order (higher k would need a Lobatto
// root-finder). Throws UnsupportedError outside 1 <= k <= 3.
CgpCoefficients assemble_cgp(int k);

// Evaluates the degree-k stage polynomial at reference coordinate
// theta in [-1,1] given the k+1 stage values (dense output).
StateVector cgp_evaluate(const CgpCoefficients& coeffs,
                         const std::vector<StateVector>& stages, double theta);

class CgpStepper final : public Stepper {
public:
    explicit CgpStepper(int order, SolverConfig config = {});

    std::string name() const override;
    void start(const OdeProblem& problem, double h) override;
    void advance(double t) override;
    const StateVector& current() const override { return y_; }
    long solver_iterations() const override { return total_iterations_; }

    const CgpCoefficients& coefficients() const { return coef_; }

    // One step from (t, y): returns all stage values U^0..U^k at the
    // mapped Lobatto points of [t, t+h]. U^k is the next state.
    std::vector<StateVector> compute_stages(const OdeProblem& problem, double t,
                                            const StateVector& y, double h);

private:
    CgpCoefficients coef_;
    SolverConfig config_;
    const OdeProblem* problem_ = nullptr;
    double h_ = 0.0;
    StateVector y_;
    long total_iterations_ = 0;
    long steps_done_ = 0;
    int last_step_iterations_ = 0;
};

// Single Crank-Nicolson step: U^n = U^{n-1} + (h/2)[F(t,U^{n-1}) + F(t+h,U^n)].
StateVector step_cgp1(const OdeProblem& problem, double t, const StateVector& y,
                      double h, const SolverConfig& config = {});

// Single order-2 Galerkin-Petrov step; returns (U^1, U^2) where U^2 is
// the next state and U^1 the midpoint stage exposed for dense output.
std::pair<StateVector, StateVector> step_cgp2(const OdeProblem& problem, double t,
                                              const StateVector& y, double h,
                                              const SolverConfig& config = {});

}  // namespace tempo

#endif
