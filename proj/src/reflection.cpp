#include "korteweg/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace korteweg {

namespace {
const complexd kI{0.0, 1.0};
}

complexd PlaneWave::value(const Vec2& x) const {
    return s0 * std::exp(kI * k * complexd(d.x * x.x + d.y * x.y, 0.0));
}

std::array<complexd, 2> PlaneWave::gradient(const Vec2& x) const {
    const complexd v = value(x);
    return {kI * k * d.x * v, kI * k * d.y * v};
}

complexd PlaneWave::laplacian(const Vec2& x) const {
    return -k * k * (d.x * d.x + d.y * d.y) * value(x);
}

complexd reflect_amplitude(const PlaneWave& incident, const InterfaceSpec& iface) {
    if (incident.d.y > 0.0)
        throw std::invalid_argument("reflect_amplitude: incident wave must travel toward the wall (d2 <= 0)");
    switch (iface.kind) {
        case WallKind::sound_soft:
            return complexd(-1.0, 0.0);
        case WallKind::sound_hard:
            return complexd(1.0, 0.0);
        case WallKind::impedance: {
            const complexd d2k = incident.k * incident.d.y;
            const complexd den = d2k - iface.zeta;
            const double scale = std::max(std::abs(d2k), std::abs(iface.zeta));
            if (std::abs(den) <= 1e-14 * std::max(scale, 1.0))
                throw std::domain_error("reflect_amplitude: impedance pole d2 k = zeta");
            return -(d2k + iface.zeta) / den;
        }
    }
    throw std::logic_error("reflect_amplitude: unknown wall kind");
}

double boundary_residual(const PlaneWave& incident, complexd amplitude,
                         const InterfaceSpec& iface, std::span<const double> x1_samples) {
    const PlaneWave refl{incident.s0 * amplitude, incident.k, {incident.d.x, -incident.d.y}};
    const double a0 = std::abs(incident.s0);
    double worst = 0.0;
    for (const double x1 : x1_samples) {
        const Vec2 x{x1, 0.0};
        complexd defect;
        double scale = a0;
        switch (iface.kind) {
            case WallKind::sound_soft:
                defect = incident.value(x) + refl.value(x);
                break;
            case WallKind::sound_hard:
                defect = incident.gradient(x)[1] + refl.gradient(x)[1];
                scale = a0 * std::max(1.0, std::abs(incident.k * incident.d.y));
                break;
            case WallKind::impedance: {
                // amplitude balance: the two waves enter weighted by (d2 k +- zeta)
                const complexd d2k = incident.k * incident.d.y;
                defect = kI * (d2k + iface.zeta) * incident.value(x) +
                         kI * (d2k - iface.zeta) * amplitude * incident.value(x);
                scale = a0 * std::max(1.0, std::abs(d2k) + std::abs(iface.zeta));
                break;
            }
        }
        worst = std::max(worst, std::abs(defect) / scale);
    }
    return worst;
}

TransmittedDirection snell_transmit(double theta, double n, double n_t) {
    if (!(n > 0.0) || !(n_t > 0.0))
        throw std::invalid_argument("snell_transmit: refractive indices must be positive");
    if (theta < 0.0 || theta > std::asin(1.0))
        throw std::invalid_argument("snell_transmit: incidence angle outside [0, pi/2]");
    TransmittedDirection out;
    const double s = std::sin(theta) * n / n_t;
    out.d1 = s;
    const double rad = 1.0 - s * s;
    if (rad >= 0.0) {
        out.d2 = complexd(std::sqrt(rad), 0.0);
    } else {
        out.d2 = complexd(0.0, std::sqrt(-rad));
        out.total_internal = true;
    }
    return out;
}

std::optional<double> critical_angle(double n, double n_t) {
    if (!(n > 0.0) || !(n_t > 0.0))
        throw std::invalid_argument("critical_angle: refractive indices must be positive");
    if (n_t > n) return std::nullopt;
    return std::asin(n_t / n);
}

EvanescentTransmission tir_transmitted_wave(double theta, double k, double n, double n_t) {
    const auto theta_c = critical_angle(n, n_t);
    if (!theta_c)
        throw std::invalid_argument("tir_transmitted_wave: no critical angle for n_t > n");
    if (theta < *theta_c - 1e-12)
        throw std::invalid_argument("tir_transmitted_wave: angle below the critical angle");
    if (!(k > 0.0)) throw std::invalid_argument("tir_transmitted_wave: k must be positive");
    EvanescentTransmission out;
    const double s = std::sin(theta);
    const double r = n_t / n;
    out.alpha = std::abs(r * r - s * s) * k * k;
    out.k_t = {complexd(s * k, 0.0), complexd(0.0, std::sqrt(out.alpha))};
    return out;
}

}  // namespace korteweg
