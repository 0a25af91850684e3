#pragma once

#include <vector>

#include "korteweg/grid.hpp"
#include "korteweg/medium.hpp"

namespace korteweg {

// Two consecutive time levels of the real condensation field s.
// curr is the level at time t; prev is one step earlier.
struct PulseState {
    std::vector<double> prev;
    std::vector<double> curr;
    double t = 0.0;
    int step_index = 0;
};

// Conservative explicit-stability limit for the linearized wave operator
//   d2s/dt2 = c0^2 lap s - lap(k1 lap s + k2 dnn s).
// The spectral bound lambda_max = c0^2 * 8/h^2 + (k1 + k2) * 64/h^4 covers the
// 5-point Laplacian and its square on the finer grid direction; dt_hard = 2/sqrt(lambda_max).
double hard_dt_limit(const MaterialParams& p, const Grid2D& g);

// hard limit with the default 0.9 safety factor applied
double stable_dt(const MaterialParams& p, const Grid2D& g, double safety = 0.9);

// Applies L s = c0^2 lap s - lap(k1 lap s + k2 dnn s) as two stencil passes.
// Non-periodic boundary nodes are left untouched (zero rows), which together
// with vanishing boundary data realizes the sound-soft pair s = 0, k1 lap s + k2 dnn s = 0.
void apply_wave_operator(const Grid2D& g, const MaterialParams& p, const Director& n,
                         const std::vector<double>& s, std::vector<double>& work,
                         std::vector<double>& out);

// Builds the state one leapfrog step after a zero-velocity start from s0:
// s^1 = s^0 + dt^2/2 * L s^0.
PulseState from_rest(const Grid2D& g, const MaterialParams& p, const Director& n,
                     const std::vector<double>& s0, double dt);

// One leapfrog update s^{n+1} = 2 s^n - s^{n-1} + dt^2 L s^n.
// Throws std::invalid_argument when dt exceeds the hard stability limit,
// unless allow_unstable is set (used to demonstrate divergence detection).
void step(PulseState& state, const MaterialParams& p, const Director& n, const Grid2D& g,
          double dt, bool allow_unstable = false);

// Energy of the half step between the two stored levels,
//   E = h1 h2 * [ 1/2 ||(curr - prev)/dt||^2 - 1/2 <L curr, prev> ],
// which leapfrog conserves exactly in exact arithmetic on periodic grids.
double discrete_energy(const PulseState& state, const MaterialParams& p, const Director& n,
                       const Grid2D& g, double dt);

struct Gaussian {
    Vec2 center{0.0, 0.0};
    double width = 1.0;  // standard deviation
    double amplitude = 1.0;
};

struct PulseSnapshot {
    double t = 0.0;
    std::vector<double> s;
};

// Front radii along the director axis and perpendicular to it, each averaged
// over the two opposite ray directions.
struct FrontMeasurement {
    double radius_along = 0.0;
    double radius_across = 0.0;
};

struct PulseRun {
    std::vector<PulseSnapshot> snapshots;  // requested times plus the final state
    FrontMeasurement front;                // measured on the final field
    double dt = 0.0;
    int steps = 0;
};

// Leapfrog run from a Gaussian at rest. Throws std::invalid_argument when the
// pulse width is below 4 grid spacings (unresolvable front).
PulseRun run_pulse(const MaterialParams& p, const Director& n, const Grid2D& g,
                   const Gaussian& gaussian, double t_end,
                   const std::vector<double>& snapshot_times = {});

// Bilinear sample of a nodal field at an arbitrary point (clamped to the grid).
double sample_bilinear(const Grid2D& g, const std::vector<double>& s, const Vec2& q);

// Outermost radius along the ray center + r*dir at which |s| still reaches 10%
// of the peak sampled along that ray (first-arrival threshold).
double front_radius(const Grid2D& g, const std::vector<double>& s, const Vec2& center,
                    const Vec2& dir);

// Phase speed measured on a periodic strip aligned with the propagation
// direction, with the director at angle xi to it. The strip carries the single
// admissible spatial mode for omega_target; the temporal period comes from
// zero-crossing times of a nodal probe. Returns omega_measured / k.
double measure_phase_speed(const MaterialParams& p, double xi, double omega_target,
                           int nodes_per_wavelength = 48);

}  // namespace korteweg
