#ifndef TEMPO_RECORD_HPP
#define TEMPO_RECORD_HPP

#include <optional>
#include <string>
#include <vector>

#include "tempo/types.hpp"

namespace tempo {

// Sampled trajectory of one integration run, plus cost accounting.
// Sample times are strictly increasing and the first sample is (t0, y0).
struct RunRecord {
    std::string method;
    std::string problem;
    double param = 0.0;      // problem parameter (Kepler eccentricity), 0 otherwise
    double step_size = 0.0;

    std::vector<double> times;
    std::vector<StateVector> states;

    // Present iff the problem has an exact solution / a Hamiltonian;
    // aligned 1:1 with `times`.
    std::optional<std::vector<double>> global_errors;
    std::optional<std::vector<double>> energy_errors;

    // Set when H(y0) == 0 forced the energy column to absolute errors.
    bool energy_error_is_absolute = false;

    double wall_seconds = 0.0;
    long step_count = 0;
    long solver_iterations = 0;
};

}  // namespace tempo

#endif
