#pragma once

#include <array>
#include <complex>

#include "korteweg/medium.hpp"

namespace korteweg {

enum class RootKind { propagating, evanescent, mixed };

// The four nondimensional roots kappa of
//   -1 + kappa^2 + (tau^2 w^2 / 4) kappa^4 = 0,  kappa = (c0/w) k,
// with tau = tau2(xi). For omega*tau > 0 one pair is purely real
// (propagating) and one purely imaginary (evanescent). When omega*tau
// underflows the quartic degenerates to the Helmholtz pair kappa = +-1.
struct DispersionRoots {
    std::array<complexd, 4> kappa{};
    std::array<RootKind, 4> kind{};
    bool degenerate = false;
    double omega_tau = 0.0;
    double omega = 0.0;
    double c0 = 1.0;

    // dimensional wavenumber k = (w/c0) kappa
    complexd dimensional(int i) const { return kappa[static_cast<size_t>(i)] * (omega / c0); }
};

DispersionRoots solve_wavenumbers(const MaterialParams& p, double omega, double xi);

// Residual of the dimensional dispersion relation
//   -w^2 + c0^2 k^2 + [k1 + k2 (d.n)^2] k^4,
// with the rigidities k1, k2 from medium.hpp. Vanishes on the roots above.
complexd dispersion_residual(const MaterialParams& p, const Director& n, complexd k,
                             const Vec2& d, double omega);

// c0/c as a function of x = omega*tau: the positive real root of the quartic.
// Equals 1 at x = 0 and decreases strictly with x.
double speed_ratio(double omega_tau);

// Penetration depth of the evanescent branch,
//   delta = (c0 / 2w) * sqrt(1 + sqrt(1 + x^2)),  x = w tau2(xi).
// Returns +inf when x = 0 (no Korteweg evanescent branch to measure).
double penetration_depth(const MaterialParams& p, double omega, double xi);

// Roots alpha of the total-internal-reflection dispersion relation
//   -1 + (1/2)(c0/c)^2 alpha + (x^2/16)(c0/c)^4 alpha^2 = 0,
// where c is the sound speed of the transmitting medium (c_ratio = c/c0).
// alpha_plus >= 0 belongs to the decaying transmitted wave; alpha_minus < 0
// has no physical interpretation and is flagged.
struct TirRoots {
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    bool minus_nonphysical = true;
};
TirRoots tir_alpha(double omega_tau, double c_ratio);

// Stiff-fluid (Kirchhoff-Love) eigenvalue mu in Lap^2 S = mu S.
double kirchhoff_love_mu(const MaterialParams& p, double omega);

// Wavenumber of the admissible propagating plane wave travelling along d.
double admissible_wavenumber(const MaterialParams& p, const Director& n, double omega,
                             const Vec2& d);

}  // namespace korteweg
