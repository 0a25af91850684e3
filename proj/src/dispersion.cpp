#include "korteweg/dispersion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace korteweg {

namespace {
// sqrt(1+x^2)-1 without cancellation for small x
double sqrt1px2_minus1(double x) {
    const double x2 = x * x;
    return x2 / (std::sqrt(1.0 + x2) + 1.0);
}
constexpr double kDegenerateTol = 1e-14;
}  // namespace

DispersionRoots solve_wavenumbers(const MaterialParams& p, double omega, double xi) {
    if (!(omega > 0.0)) throw std::invalid_argument("solve_wavenumbers: omega must be positive");
    DispersionRoots out;
    out.omega = omega;
    out.c0 = p.c0;
    const double x = omega * tau2(p, xi);
    out.omega_tau = x;

    if (x < kDegenerateTol) {
        // Helmholtz limit: quartic term underflows, only the +-1 pair survives.
        out.degenerate = true;
        out.kappa = {complexd(1.0, 0.0), complexd(-1.0, 0.0), complexd(0.0, 0.0),
                     complexd(0.0, 0.0)};
        out.kind = {RootKind::propagating, RootKind::propagating, RootKind::propagating,
                    RootKind::propagating};
        return out;
    }

    // kappa^2 = (-2 +- 2 sqrt(1+x^2))/x^2; the + branch rewritten stably.
    const double h = std::sqrt(1.0 + x * x);
    const double kr = std::sqrt(2.0 / (1.0 + h));        // real pair
    const double ki = std::sqrt(2.0 * (1.0 + h)) / x;    // imaginary pair magnitude
    out.kappa = {complexd(kr, 0.0), complexd(-kr, 0.0), complexd(0.0, ki), complexd(0.0, -ki)};
    out.kind = {RootKind::propagating, RootKind::propagating, RootKind::evanescent,
                RootKind::evanescent};
    return out;
}

complexd dispersion_residual(const MaterialParams& p, const Director& n, complexd k,
                             const Vec2& d, double omega) {
    const double dn = n.dot(d);
    const double quartic = korteweg_rigidity(p) + nematic_rigidity(p) * dn * dn;
    const complexd k2 = k * k;
    return -omega * omega + p.c0 * p.c0 * k2 + quartic * k2 * k2;
}

double speed_ratio(double omega_tau) {
    if (omega_tau < 0.0) throw std::invalid_argument("speed_ratio: omega_tau must be >= 0");
    const double h1 = sqrt1px2_minus1(omega_tau);  // sqrt(1+x^2)-1
    return std::sqrt(2.0 / (2.0 + h1));
}

double penetration_depth(const MaterialParams& p, double omega, double xi) {
    if (!(omega > 0.0)) throw std::invalid_argument("penetration_depth: omega must be positive");
    const double x = omega * tau2(p, xi);
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    const double h = std::sqrt(1.0 + x * x);
    return p.c0 / (2.0 * omega) * std::sqrt(1.0 + h);
}

TirRoots tir_alpha(double omega_tau, double c_ratio) {
    if (!(omega_tau > 0.0)) throw std::invalid_argument("tir_alpha: omega_tau must be positive");
    if (!(c_ratio > 0.0)) throw std::invalid_argument("tir_alpha: c_ratio must be positive");
    TirRoots r;
    const double c2 = c_ratio * c_ratio;
    const double h = std::sqrt(1.0 + omega_tau * omega_tau);
    r.alpha_plus = 4.0 * c2 / (1.0 + h);  // = 4 c2 (h-1)/x^2 without cancellation
    r.alpha_minus = -4.0 * c2 * (1.0 + h) / (omega_tau * omega_tau);
    r.minus_nonphysical = true;
    return r;
}

double kirchhoff_love_mu(const MaterialParams& p, double omega) {
    if (p.u1 <= 0.0)
        throw std::domain_error("kirchhoff_love_mu: u1 must be positive");
    return omega * omega / (p.c0 * p.c0 * p.u1 * p.rho0 * p.rho0);
}

double admissible_wavenumber(const MaterialParams& p, const Director& n, double omega,
                             const Vec2& d) {
    const double nd = d.norm();
    if (!(nd > 0.0)) throw std::invalid_argument("admissible_wavenumber: zero direction");
    const double xi = std::acos(std::clamp(std::abs(n.dot(d)) / nd, 0.0, 1.0));
    const DispersionRoots roots = solve_wavenumbers(p, omega, xi);
    return roots.dimensional(0).real();
}

}  // namespace korteweg
