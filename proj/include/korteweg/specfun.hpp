#pragma once

#include <complex>

namespace korteweg {

// Self-contained cylinder-function kernel for real non-negative arguments and
// integer orders |j| <= 200 (the truncation guard of the scattering series).
//
// bessel_j: Miller downward recurrence normalized with the even-order sum
//           identity J0 + 2 sum J_{2m} = 1; relative accuracy ~1e-12 on
//           x <= 50. J_{-j} = (-1)^j J_j.
// bessel_y: power series for orders 0 and 1 below the crossover, Hankel
//           asymptotic expansion above it, upward recurrence for higher
//           orders. Returns -inf for 0 < x < 1e-8 (divergence signal).
// hankel1:  J + iY (first kind).
double bessel_j(int j, double x);
double bessel_y(int j, double x);
std::complex<double> hankel1(int j, double x);

// J_{j+1} Y_j - J_j Y_{j+1} = 2/(pi x); returned for self-checks.
double wronskian_defect(int j, double x);

constexpr int kMaxBesselOrder = 200;

}  // namespace korteweg
