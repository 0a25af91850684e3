#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "korteweg/medium.hpp"

namespace korteweg {

// Plane wave s0 exp(i k d.x). The direction d is a unit vector; k may be
// complex (evanescent transmitted waves carry the decay in k2 instead).
struct PlaneWave {
    complexd s0{1.0, 0.0};
    complexd k{1.0, 0.0};
    Vec2 d{0.0, -1.0};

    complexd value(const Vec2& x) const;
    // gradient and Laplacian of the field, for boundary defect checks
    std::array<complexd, 2> gradient(const Vec2& x) const;
    complexd laplacian(const Vec2& x) const;
    PlaneWave mirrored() const { return {s0, k, {d.x, -d.y}}; }
};

enum class WallKind { sound_soft, sound_hard, impedance };

// Flat wall along the x1-axis; the fluid occupies the upper half-plane, so an
// incoming wave has d.y <= 0 and the reflected wave is the d.y-mirrored one.
struct InterfaceSpec {
    WallKind kind = WallKind::sound_soft;
    complexd zeta{0.0, 0.0};  // impedance parameter, used only for WallKind::impedance
};

// Reflected amplitude A such that S = S_inc + A * S_inc.mirrored() satisfies
// the wall condition: -1 (soft), +1 (hard), -(d2 k + zeta)/(d2 k - zeta)
// (impedance). Throws std::domain_error at the impedance pole d2 k = zeta.
complexd reflect_amplitude(const PlaneWave& incident, const InterfaceSpec& iface);

// Max boundary-condition defect over sample points x1 on the wall for the
// superposition S_inc + A * mirror. Soft walls check |S|, hard walls |dS/dx2|,
// impedance walls the amplitude balance i(d2 k + zeta) S_inc + i A (d2 k - zeta) S_inc.
// Defects are normalized by the natural scale of the checked quantity.
double boundary_residual(const PlaneWave& incident, complexd amplitude,
                         const InterfaceSpec& iface, std::span<const double> x1_samples);

// Snell direction of the transmitted wave for refractive indices n (incident
// side) and n_t (transmitted side); d2 becomes purely imaginary past the
// critical angle.
struct TransmittedDirection {
    double d1 = 0.0;
    complexd d2{0.0, 0.0};
    bool total_internal = false;
};
TransmittedDirection snell_transmit(double theta, double n, double n_t);

// arcsin(n_t/n); empty when n_t > n (no total internal reflection).
std::optional<double> critical_angle(double n, double n_t);

// Evanescent transmitted wavevector beyond the critical angle:
//   kT = (k sin(theta), i sqrt(alpha)),  alpha = |(n_t/n)^2 - sin^2(theta)| k^2,
// on the branch that decays with increasing x2 (|exp(i kT.(0,x2))| = e^-1 at
// x2 = 1/sqrt(alpha)). Requires theta at or beyond the critical angle.
struct EvanescentTransmission {
    double alpha = 0.0;
    std::array<complexd, 2> k_t{};
};
EvanescentTransmission tir_transmitted_wave(double theta, double k, double n, double n_t);

}  // namespace korteweg
