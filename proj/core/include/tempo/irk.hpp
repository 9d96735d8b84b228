#ifndef TEMPO_IRK_HPP
#define TEMPO_IRK_HPP

#include <string>
#include <vector>

#include "tempo/stepper.hpp"
#include "tempo/types.hpp"

namespace tempo {

// Implicit Runge-Kutta tableau. Row-sum consistency c_i = sum_j a(i,j)
// and sum_i b_i = 1 are enforced on use.
struct RkTableau {
    std::string name;
    int stages = 0;
    Matrix a;                // s x s
    std::vector<double> b;   // s
    std::vector<double> c;   // s
};

// 2-stage Gauss collocation tableau (order 4, symplectic, symmetric).
RkTableau gauss2_tableau();

// Throws ContractViolation when the tableau is inconsistent.
void validate_tableau(const RkTableau& tableau);

class IrkStepper final : public Stepper {
public:
    explicit IrkStepper(RkTableau tableau, SolverConfig config = {});

    std::string name() const override;
    void start(const OdeProblem& problem, double h) override;
    void advance(double t) override;
    const StateVector& current() const override { return y_; }
    long solver_iterations() const override { return total_iterations_; }

    const RkTableau& tableau() const { return tableau_; }

private:
    StateVector step_once(double t, const StateVector& y);

    RkTableau tableau_;
    SolverConfig config_;
    const OdeProblem* problem_ = nullptr;
    double h_ = 0.0;
    StateVector y_;
    long total_iterations_ = 0;
    long steps_done_ = 0;

    friend StateVector step_irk(const OdeProblem&, double, const StateVector&, double,
                                const RkTableau&, const SolverConfig&);
};

// One step y -> y + h sum_i b_i f(Y_i) with the stage values Y_i
// solving Y_i = y + h sum_j a(i,j) f(t + c_j h, Y_j).
StateVector step_irk(const OdeProblem& problem, double t, const StateVector& y,
                     double h, const RkTableau& tableau, const SolverConfig& config = {});

}  // namespace tempo

#endif
