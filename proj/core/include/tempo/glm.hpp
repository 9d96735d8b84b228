#ifndef TEMPO_GLM_HPP
#define TEMPO_GLM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tempo/irk.hpp"
#include "tempo/stepper.hpp"
#include "tempo/types.hpp"

namespace tempo {

// How the r-component input vector of a general linear method is built
// at the start of a run. Component l approximates
//     sum_i multipliers(l, i) * h^i * y^(i)(t0).
// Row 0 must be (1, 0, ...) so the leading component reproduces y0
// exactly. Pure y0 combinations are evaluated directly; components with
// derivative terms are built from a fine-step reference integration.
struct StarterSpec {
    Matrix multipliers;  // r x (max derivative order + 1)

    bool is_identity() const;  // r == 1 and row 0 == (1, 0, ...)
};

// General linear method: s internal stages, r-component input vector
// propagated between steps,
//     Y    = h (A x I) f(Y) + (U x I) y_in
//     y_out = h (B x I) f(Y) + (V x I) y_in.
// Stage abscissae are taken as the row sums of A (exact for r = 1
// Runge-Kutta embeddings; immaterial for autonomous systems).
struct GlmTableau {
    std::string name;
    int stages = 0;  // s
    int inputs = 0;  // r
    int order = 0;   // declared order p
    Matrix a;        // s x s
    Matrix u;        // s x r
    Matrix b;        // r x s
    Matrix v;        // r x r
    StarterSpec starter;
};

// Dimension and starter checks plus a power-boundedness smoke test on V
// (zero-stability proxy: max ||V^m||_inf over m <= 10^4 must stay
// bounded). Throws ConfigError with the offending detail.
void validate_glm_tableau(const GlmTableau& tableau);

// Parses the structured text format (see serialize_glm_tableau and the
// repo documentation): integer header fields s, r, p; labeled matrix
// blocks A, U, B, V in row-major order with decimal or rational ("1/3")
// entries; a starter block of r multiplier rows. Rationals are parsed
// exactly and converted once to binary floating point.
GlmTableau load_glm_tableau(std::istream& source, const std::string& origin = "<stream>");
GlmTableau load_glm_tableau_file(const std::string& path);

std::string serialize_glm_tableau(const GlmTableau& tableau);

// Embeds a Runge-Kutta tableau as an r = 1 general linear method:
// U = column of ones, V = [1], B = b^T, identity starter.
GlmTableau glm_from_rk(const RkTableau& rk, int order);

// Explicit Euler as the minimal s = r = 1 instance.
GlmTableau euler_glm();

// Builds the r input vectors at t0. The leading component equals y0
// exactly; derivative-based components are accurate to O(h^{p+1}),
// realized by differentiating f along a reference trajectory computed
// with step h/100 (order-2 Galerkin-Petrov stepping).
std::vector<StateVector> start_glm(const OdeProblem& problem, const GlmTableau& tableau,
                                   double h);

// One step: consumes the r input vectors at t, returns the r outputs at
// t + h. `iterations_out`, when given, receives the stage-solver count.
std::vector<StateVector> step_glm(const OdeProblem& problem, double t,
                                  const std::vector<StateVector>& inputs, double h,
                                  const GlmTableau& tableau, const SolverConfig& config = {},
                                  int* iterations_out = nullptr);

class GlmStepper final : public Stepper {
public:
    explicit GlmStepper(GlmTableau tableau, SolverConfig config = {});

    std::string name() const override;
    void start(const OdeProblem& problem, double h) override;
    void advance(double t) override;
    const StateVector& current() const override { return inputs_.front(); }
    long solver_iterations() const override { return total_iterations_; }

    const GlmTableau& tableau() const { return tableau_; }
    const std::vector<StateVector>& inputs() const { return inputs_; }

private:
    GlmTableau tableau_;
    SolverConfig config_;
    const OdeProblem* problem_ = nullptr;
    double h_ = 0.0;
    std::vector<StateVector> inputs_;
    long total_iterations_ = 0;
    long steps_done_ = 0;
};

}  // namespace tempo

#endif
