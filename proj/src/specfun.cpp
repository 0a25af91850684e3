#include "korteweg/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace korteweg {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEulerL = 0.577215664901532860606512090082402431L;
constexpr double kTinyX = 1e-8;
// series/asymptotic crossover for Y0, Y1; below it the power series loses
// ~x/ln(10) digits to cancellation, above it the asymptotic tail is < 1e-11
constexpr double kYCrossover = 13.0;

void check_args(int j, double x, const char* who) {
    if (x < 0.0) throw std::domain_error(std::string(who) + ": negative argument");
    if (j < -kMaxBesselOrder || j > kMaxBesselOrder)
        throw std::domain_error(std::string(who) + ": order beyond the +-200 guard");
}

// Downward Miller recurrence for all of J_0..J_jmax at once.
std::vector<long double> bessel_j_table(int jmax, double x) {
    const int base = std::max(jmax, static_cast<int>(std::ceil(x)));
    int start = base + 30 + 3 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(base + 1))));
    if (start % 2 != 0) ++start;  // even start keeps the normalization sum aligned

    std::vector<long double> out(static_cast<size_t>(jmax) + 1, 0.0L);
    const long double xl = x;
    long double jp1 = 0.0L;  // J_{m+1} seed
    long double jp = 1.0e-300L;  // J_m seed
    long double sum = 0.0L;      // J_0 + 2 sum J_{2m}
    for (int m = start; m >= 1; --m) {
        long double jm1 = (2.0L * m / xl) * jp - jp1;
        jp1 = jp;
        jp = jm1;
        if (m - 1 <= jmax) out[static_cast<size_t>(m - 1)] = jp;
        if ((m - 1) % 2 == 0) sum += (m - 1 == 0) ? jp : 2.0L * jp;
        if (std::fabs(static_cast<double>(jp)) > 1e250) {  // rescale to dodge overflow
            constexpr long double s = 1e-250L;
            jp *= s;
            jp1 *= s;
            sum *= s;
            for (auto& v : out) v *= s;
        }
    }
    for (auto& v : out) v /= sum;
    return out;
}

long double bessel_j_raw(int j, double x) {
    if (x == 0.0) return j == 0 ? 1.0L : 0.0L;
    if (x < kTinyX) {
        // leading behaviour (x/2)^j / j!; two terms are already below 1e-16
        long double t = 1.0L;
        for (int m = 1; m <= j; ++m) t *= (0.5L * x) / m;
        return t * (1.0L - 0.25L * static_cast<long double>(x) * x / (j + 1));
    }
    return bessel_j_table(j, x)[static_cast<size_t>(j)];
}

// Y0, Y1 power series (Abramowitz & Stegun 9.1.13/9.1.11 with psi expanded
// into harmonic numbers), evaluated in long double.
long double bessel_y01_series(int n, double x) {
    const long double xl = x;
    const long double q = 0.25L * xl * xl;
    const long double lg = std::log(0.5L * xl) + kEulerL;
    if (n == 0) {
        long double term = 1.0L;  // (q)^m / (m!)^2, m = 0
        long double h = 0.0L;     // harmonic number H_m
        long double sum = 0.0L;
        long double j0 = 1.0L;
        for (int m = 1; m <= 400; ++m) {
            term *= q / (static_cast<long double>(m) * m);
            h += 1.0L / m;
            const long double sgn = (m % 2 == 0) ? -1.0L : 1.0L;
            sum += sgn * h * term;
            j0 += (sgn < 0 ? term : -term);  // J0 series shares the terms
            if (term < 1e-38L * (std::fabs(static_cast<double>(sum)) + 1.0L)) break;
        }
        return 2.0L / kPiL * (lg * j0 + sum);
    }
    // n == 1
    long double term = 1.0L;  // q^m / (m! (m+1)!)
    long double hm = 0.0L, hm1 = 1.0L;
    long double sum = hm + hm1;  // m = 0 contribution of (H_m + H_{m+1})
    long double j1 = 1.0L;       // sum for J1 / (x/2)
    long double sgn = 1.0L;
    for (int m = 1; m <= 400; ++m) {
        term *= q / (static_cast<long double>(m) * (m + 1));
        hm += 1.0L / m;
        hm1 += 1.0L / (m + 1);
        sgn = -sgn;
        sum += sgn * (hm + hm1) * term;
        j1 += sgn * term;
        if (term < 1e-38L * (std::fabs(static_cast<double>(sum)) + 1.0L)) break;
    }
    const long double half_x = 0.5L * xl;
    const long double j1v = half_x * j1;
    return 2.0L / kPiL * (lg * j1v) - 2.0L / (kPiL * xl) - half_x / kPiL * sum;
}

// Hankel asymptotic expansion P, Q for order nu in {0, 1}; truncated at the
// smallest term, which is ~e^(-2x) and < 1e-11 beyond the crossover.
void hankel_pq(int nu, double x, long double& p, long double& q) {
    const long double mu = 4.0L * nu * nu;
    const long double ix8 = 1.0L / (8.0L * static_cast<long double>(x));
    p = 1.0L;
    q = 0.0L;
    long double term = 1.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k <= 60; ++k) {
        const long double f = (mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) * ix8 / k;
        term *= f;
        const long double mag = std::fabs(static_cast<double>(term));
        if (mag > prev) break;  // divergence onset: stop at the smallest term
        prev = mag;
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
        if (mag < 1e-20L) break;
    }
}

long double bessel_y01(int n, double x) {
    if (x < kYCrossover) return bessel_y01_series(n, x);
    long double p, q;
    hankel_pq(n, x, p, q);
    const long double chi = static_cast<long double>(x) - (2 * n + 1) * kPiL / 4.0L;
    return std::sqrt(2.0L / (kPiL * static_cast<long double>(x))) *
           (std::sin(chi) * p + std::cos(chi) * q);
}

}  // namespace

double bessel_j(int j, double x) {
    check_args(j, x, "bessel_j");
    const int aj = std::abs(j);
    const long double v = bessel_j_raw(aj, x);
    return static_cast<double>((j < 0 && aj % 2 != 0) ? -v : v);
}

double bessel_y(int j, double x) {
    check_args(j, x, "bessel_y");
    if (x == 0.0) throw std::domain_error("bessel_y: argument must be positive");
    if (x < kTinyX) return -std::numeric_limits<double>::infinity();
    const int aj = std::abs(j);
    long double ym = bessel_y01(0, x);
    if (aj == 0) return static_cast<double>(ym);
    long double y = bessel_y01(1, x);
    for (int m = 1; m < aj; ++m) {  // upward recurrence rides the dominant solution
        const long double yn = (2.0L * m / static_cast<long double>(x)) * y - ym;
        ym = y;
        y = yn;
        if (std::isinf(static_cast<double>(y)))
            return (j < 0 && aj % 2 != 0) ? static_cast<double>(-y) : static_cast<double>(y);
    }
    return static_cast<double>((j < 0 && aj % 2 != 0) ? -y : y);
}

std::complex<double> hankel1(int j, double x) {
    return {bessel_j(j, x), bessel_y(j, x)};
}

double wronskian_defect(int j, double x) {
    const double w = bessel_j(j + 1, x) * bessel_y(j, x) - bessel_j(j, x) * bessel_y(j + 1, x);
    const double exact = 2.0 / (M_PI * x);
    return (w - exact) / exact;
}

}  // namespace korteweg
