#pragma once

#include <complex>
#include <vector>

#include "korteweg/medium.hpp"

namespace korteweg {

// Truncated cylindrical-harmonic expansion of a unit plane wave hitting a
// sound-soft disc of radius R. psi is the propagation angle of the incident
// wave; coefficients a_j = i^j e^{-i j psi} J_j(kR) for |j| <= jmax.
struct MieExpansion {
    double k = 1.0;
    double R = 1.0;
    double psi = 0.0;
    int jmax = 0;
    std::vector<complexd> a;  // a[j + jmax], j = -jmax..jmax

    const complexd& coeff(int j) const { return a[static_cast<size_t>(j + jmax)]; }
};

MieExpansion jacobi_anger_coeffs(double k, double psi, double R, int jmax);

// Smallest truncation order with |J_jmax(kR)| < target_tail, floored at
// kR + 10 and capped at the library order guard.
struct JmaxChoice {
    int jmax = 0;
    bool capped = false;
};
JmaxChoice select_jmax(double k, double R, double target_tail);

// Partial sum sum_j a_j e^(i j theta) of the expansion re-evaluated at radius
// r; reconstructs e^(i k r cos(theta - psi)).
complexd incident_partial_sum(const MieExpansion& exp, double r, double theta);

// Scattered field of the sound-soft disc,
//   S+(r, theta) = -sum_j a_j H1_j(kr)/H1_j(kR) e^(i j theta),  r >= R;
// at r = R it cancels the incident trace (total field zero on the boundary).
complexd mie_scattered_field(const MieExpansion& exp, double r, double theta);

// Directional far-field amplitude F with S+ ~ F(theta) e^(i k r)/sqrt(r).
complexd far_field_amplitude(const MieExpansion& exp, double theta);

// Boundary-layer description of the fourth-order problem near a sound-soft
// wall in the stiff regime: rigidity k1 = ell^2, nematic rigidity = ell^2/gamma.
struct BoundaryLayerSpec {
    double ell = 0.0;
    double gamma = 1.0;
    double c0 = 1.0;
};
BoundaryLayerSpec layer_from_material(const MaterialParams& p);

// Exponential decay rate of the layer profile in the stretched normal
// coordinate (distance / ell): lambda = sqrt(c0^2 / (nu.(I + gamma^-1 n n)nu)).
double boundary_layer_rate(const BoundaryLayerSpec& layer, const Vec2& nu, const Director& n);

// Leading-order layer value on the wall from the traces of the incident field
// S- and the outer scattered field S+_0:
//   S+_ell = (ell^2/c0) (Lap S- + gamma^-1 nHn S- - Lap S+_0 - gamma^-1 nHn S+_0).
complexd boundary_layer_value(const BoundaryLayerSpec& layer, complexd lap_inc,
                              complexd hess_nn_inc, complexd lap_outer, complexd hess_nn_outer);

}  // namespace korteweg
