#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace korteweg {

using complexd = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::sqrt(x * x + y * y); }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

// Bulk material description of a (nematic-)Korteweg fluid.
// c0: ideal sound speed, rho0: rest density, u1: isotropic Korteweg modulus,
// u2: nematic Korteweg modulus (0 for an isotropic fluid).
struct MaterialParams {
    double c0 = 1.0;
    double rho0 = 1.0;
    double u1 = 0.0;
    double u2 = 0.0;

    MaterialParams() = default;
    MaterialParams(double c0_, double rho0_, double u1_, double u2_ = 0.0)
        : c0(c0_), rho0(rho0_), u1(u1_), u2(u2_) {
        if (!(c0 > 0.0) || !(rho0 > 0.0))
            throw std::invalid_argument("MaterialParams: c0 and rho0 must be positive");
        if (u1 < 0.0 || u2 < 0.0)
            throw std::invalid_argument("MaterialParams: Korteweg moduli must be non-negative");
    }

    bool isotropic() const { return u2 == 0.0; }
};

// Unit nematic director; the constructor normalizes, a zero vector is rejected.
struct Director {
    double x = 1.0;
    double y = 0.0;

    Director() = default;
    Director(double x_, double y_) {
        const double n = std::sqrt(x_ * x_ + y_ * y_);
        if (!(n > 0.0))
            throw std::invalid_argument("Director: zero vector");
        x = x_ / n;
        y = y_ / n;
    }
    static Director from_angle(double a) { return Director(std::cos(a), std::sin(a)); }

    double dot(const Vec2& d) const { return x * d.x + y * d.y; }
    Vec2 vec() const { return {x, y}; }
};

// Characteristic Korteweg times. The product omega*tau is the only way the
// moduli enter the nondimensional dispersion relation.
inline double tau1(const MaterialParams& p) {
    return 4.0 * p.rho0 * std::sqrt(p.u1) / (p.c0 * p.c0);
}

// xi is the angle between the propagation direction and the director.
inline double tau2(const MaterialParams& p, double xi) {
    const double c = std::cos(xi);
    return 4.0 * p.rho0 * std::sqrt(p.u1 + p.u2 * c * c) / (p.c0 * p.c0);
}

// Coefficients of the fourth-order terms in the wave operator,
//   -w^2 S - c0^2 Lap S + k1 Lap^2 S + k2 Lap(n.(HS)n) = 0,
// fixed so that plane waves reproduce the tau-based dispersion relation:
// k1 + k2 cos^2(xi) = tau2(xi)^2 c0^4 / 4.
inline double korteweg_rigidity(const MaterialParams& p) {
    return 4.0 * p.rho0 * p.rho0 * p.u1;
}
inline double nematic_rigidity(const MaterialParams& p) {
    return 4.0 * p.rho0 * p.rho0 * p.u2;
}

// Dimensionless groups of a run at fixed angular frequency.
struct NondimGroups {
    MaterialParams params;
    double omega = 0.0;

    NondimGroups(const MaterialParams& p, double w) : params(p), omega(w) {
        if (!(w >= 0.0)) throw std::invalid_argument("NondimGroups: omega must be non-negative");
    }
    double tau1() const { return korteweg::tau1(params); }
    double tau2(double xi) const { return korteweg::tau2(params, xi); }
    double omega_tau(double xi) const { return omega * tau2(xi); }
};

}  // namespace korteweg
