#ifndef TEMPO_PROBLEMS_HPP
#define TEMPO_PROBLEMS_HPP

#include <array>
#include <iosfwd>
#include <string>

#include "tempo/problem.hpp"

namespace tempo {

// Unit-mass, unit-stiffness harmonic oscillator: H = (p^2 + q^2)/2,
// p' = -q, q' = p. Exact solution is the rotation of (p0, q0).
OdeProblem make_sho(StateVector y0 = {0.0, 1.0});

struct KeplerConfig {
    double eccentricity = 0.0;  // 0 <= e < 1
    long periods = 1;           // orbital period is 2*pi
};

// Planar two-body problem, H = |p|^2/2 - 1/|q|, state (p1,p2,q1,q2),
// initial point at perihelion: q = (1-e, 0), p = (0, sqrt((1+e)/(1-e))).
// Total energy is -1/2 for every eccentricity.
OdeProblem make_kepler(const KeplerConfig& config);

// Exact orbit state at time t via the eccentric anomaly E solving
// E - e sin E = t (mod 2*pi). Newton iteration from E0 = t mod 2*pi
// with a bisection fallback, tolerance 1e-14.
StateVector kepler_exact(double eccentricity, double t);

// Lennard-Jones pair potential 4*eps*((sigma/r)^12 - (sigma/r)^6) and
// its radial derivative V'(r); V(sigma) = 0 and V'(2^(1/6) sigma) = 0.
// Exposed for direct testing of the force field.
double lj_pair_potential(double eps, double sigma, double r);
double lj_pair_derivative(double eps, double sigma, double r);

// Planar 7-atom Lennard-Jones cluster (central atom plus hexagonal
// shell). Internal units: length nm, time nsec, mass kg — with this
// choice 1 J is exactly 1 internal energy unit, so SI constants carry
// over unchanged. 1 fsec = 1e-6 internal time units.
inline constexpr double kFemtosecond = 1e-6;

struct ArgonConfig {
    static constexpr int atom_count = 7;
    double mass = 66.34e-27;            // kg
    double sigma = 0.341;               // nm
    double epsilon = 1.654028284e-21;   // J
    std::array<std::array<double, 2>, 7> positions{};   // nm
    std::array<std::array<double, 2>, 7> velocities{};  // nm/nsec

    // The frozen-crystal configuration shipped in data/argon7.txt.
    static ArgonConfig standard();
};

// Parses the plain-text data format: 7 rows of four decimal columns
// (q_x nm, q_y nm, v_x nm/nsec, v_y nm/nsec); '#' starts a comment.
ArgonConfig load_argon_config(std::istream& in, const std::string& origin = "<stream>");
ArgonConfig load_argon_config_file(const std::string& path);

// State (p, q) in R^28, momenta p_i = m v_i first. No exact solution.
// Throws ConfigError on coincident atoms or non-positive constants.
OdeProblem make_argon7(const ArgonConfig& config = ArgonConfig::standard());

}  // namespace tempo

#endif
