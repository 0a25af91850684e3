#include "korteweg/scattering.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "korteweg/specfun.hpp"

namespace korteweg {

namespace {
const complexd kI{0.0, 1.0};

complexd ipow(int j) {  // i^j for any integer j
    switch (((j % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
}  // namespace

MieExpansion jacobi_anger_coeffs(double k, double psi, double R, int jmax) {
    if (!(k > 0.0) || !(R > 0.0))
        throw std::invalid_argument("jacobi_anger_coeffs: k and R must be positive");
    if (jmax < 0 || jmax > kMaxBesselOrder)
        throw std::invalid_argument("jacobi_anger_coeffs: jmax outside [0, 200]");
    MieExpansion out;
    out.k = k;
    out.R = R;
    out.psi = psi;
    out.jmax = jmax;
    out.a.resize(static_cast<size_t>(2 * jmax) + 1);
    for (int j = -jmax; j <= jmax; ++j) {
        const complexd phase = ipow(j) * std::exp(complexd(0.0, -j * psi));
        out.a[static_cast<size_t>(j + jmax)] = phase * bessel_j(j, k * R);
    }
    return out;
}

JmaxChoice select_jmax(double k, double R, double target_tail) {
    if (!(k > 0.0) || !(R > 0.0) || !(target_tail > 0.0))
        throw std::invalid_argument("select_jmax: arguments must be positive");
    const int floor_j = static_cast<int>(std::ceil(k * R)) + 10;
    JmaxChoice out;
    for (int j = floor_j; j <= kMaxBesselOrder; ++j) {
        if (std::abs(bessel_j(j, k * R)) < target_tail) {
            out.jmax = j;
            return out;
        }
    }
    out.jmax = kMaxBesselOrder;
    out.capped = true;
    return out;
}

complexd incident_partial_sum(const MieExpansion& exp, double r, double theta) {
    // coefficients re-evaluated at radius r: sum_j i^j e^{-ij psi} J_j(kr) e^{ij theta}
    complexd sum{0.0, 0.0};
    for (int j = -exp.jmax; j <= exp.jmax; ++j) {
        const complexd phase = ipow(j) * std::exp(complexd(0.0, j * (theta - exp.psi)));
        sum += phase * bessel_j(j, exp.k * r);
    }
    return sum;
}

complexd mie_scattered_field(const MieExpansion& exp, double r, double theta) {
    if (r < exp.R)
        throw std::invalid_argument("mie_scattered_field: r must be outside the disc");
    complexd sum{0.0, 0.0};
    for (int j = -exp.jmax; j <= exp.jmax; ++j) {
        const complexd ratio = hankel1(j, exp.k * r) / hankel1(j, exp.k * exp.R);
        sum += exp.coeff(j) * ratio * std::exp(complexd(0.0, j * theta));
    }
    return -sum;
}

complexd far_field_amplitude(const MieExpansion& exp, double theta) {
    // H1_j(kr) ~ sqrt(2/(pi k r)) e^{i(kr - j pi/2 - pi/4)}
    complexd sum{0.0, 0.0};
    for (int j = -exp.jmax; j <= exp.jmax; ++j) {
        sum += exp.coeff(j) * ipow(-j) * std::exp(complexd(0.0, j * theta)) /
               hankel1(j, exp.k * exp.R);
    }
    const complexd pref = std::sqrt(2.0 / (M_PI * exp.k)) * std::exp(complexd(0.0, -M_PI / 4.0));
    return -pref * sum;
}

BoundaryLayerSpec layer_from_material(const MaterialParams& p) {
    if (!(p.u1 > 0.0))
        throw std::invalid_argument("layer_from_material: stiff layer needs u1 > 0");
    BoundaryLayerSpec out;
    out.ell = std::sqrt(korteweg_rigidity(p));
    out.gamma = p.u2 > 0.0 ? p.u1 / p.u2 : std::numeric_limits<double>::infinity();
    out.c0 = p.c0;
    return out;
}

double boundary_layer_rate(const BoundaryLayerSpec& layer, const Vec2& nu, const Director& n) {
    const double nn = nu.norm();
    if (!(nn > 0.0)) throw std::invalid_argument("boundary_layer_rate: zero normal");
    const Vec2 u{nu.x / nn, nu.y / nn};
    const double proj = n.dot(u);
    const double quad = 1.0 + proj * proj / layer.gamma;  // nu.(I + gamma^-1 n(x)n) nu
    return std::sqrt(layer.c0 * layer.c0 / quad);
}

complexd boundary_layer_value(const BoundaryLayerSpec& layer, complexd lap_inc,
                              complexd hess_nn_inc, complexd lap_outer, complexd hess_nn_outer) {
    const double ginv = 1.0 / layer.gamma;
    return layer.ell * layer.ell / layer.c0 *
           (lap_inc + ginv * hess_nn_inc - lap_outer - ginv * hess_nn_outer);
}

}  // namespace korteweg
