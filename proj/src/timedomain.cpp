#include "korteweg/timedomain.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "korteweg/dispersion.hpp"

namespace korteweg {

namespace {

size_t idx(const Grid2D& g, int i, int j) { return static_cast<size_t>(g.index(i, j)); }

// 5-point Laplacian. The axis terms are grouped as (f_minus + f_plus) - 2 f_c
// so that mirror-reflected data produces bitwise mirror-reflected output.
void lap_real(const Grid2D& g, const std::vector<double>& f, std::vector<double>& out) {
    const int n1 = g.n1(), n2 = g.n2();
    const double w1 = 1.0 / (g.h1() * g.h1());
    const double w2 = 1.0 / (g.h2() * g.h2());
    const bool wrap = g.periodic();
    for (int i = 0; i < n1; ++i) {
        const int im = (i > 0) ? i - 1 : n1 - 1;
        const int ip = (i < n1 - 1) ? i + 1 : 0;
        for (int j = 0; j < n2; ++j) {
            if (!wrap && (i == 0 || i == n1 - 1 || j == 0 || j == n2 - 1)) {
                out[idx(g, i, j)] = 0.0;
                continue;
            }
            const int jm = (j > 0) ? j - 1 : n2 - 1;
            const int jp = (j < n2 - 1) ? j + 1 : 0;
            const double fc = f[idx(g, i, j)];
            const double t1 = ((f[idx(g, im, j)] + f[idx(g, ip, j)]) - 2.0 * fc) * w1;
            const double t2 = ((f[idx(g, i, jm)] + f[idx(g, i, jp)]) - 2.0 * fc) * w2;
            out[idx(g, i, j)] = t1 + t2;
        }
    }
}

// Second derivative along the director, n.(H f)n. The cross term is grouped
// antisymmetrically so flipping the data and the director across either axis
// negates it exactly, keeping mirror runs bitwise identical.
void dnn_real(const Grid2D& g, const Director& n, const std::vector<double>& f,
              std::vector<double>& out) {
    const int n1 = g.n1(), n2 = g.n2();
    const double cxx = n.x * n.x / (g.h1() * g.h1());
    const double cyy = n.y * n.y / (g.h2() * g.h2());
    const double cxy = 2.0 * n.x * n.y / (4.0 * g.h1() * g.h2());
    const bool wrap = g.periodic();
    for (int i = 0; i < n1; ++i) {
        const int im = (i > 0) ? i - 1 : n1 - 1;
        const int ip = (i < n1 - 1) ? i + 1 : 0;
        for (int j = 0; j < n2; ++j) {
            if (!wrap && (i == 0 || i == n1 - 1 || j == 0 || j == n2 - 1)) {
                out[idx(g, i, j)] = 0.0;
                continue;
            }
            const int jm = (j > 0) ? j - 1 : n2 - 1;
            const int jp = (j < n2 - 1) ? j + 1 : 0;
            const double fc = f[idx(g, i, j)];
            double acc = cxx * ((f[idx(g, im, j)] + f[idx(g, ip, j)]) - 2.0 * fc);
            acc += cyy * ((f[idx(g, i, jm)] + f[idx(g, i, jp)]) - 2.0 * fc);
            if (cxy != 0.0) {
                const double cross = (f[idx(g, ip, jp)] + f[idx(g, im, jm)]) -
                                     (f[idx(g, im, jp)] + f[idx(g, ip, jm)]);
                acc += cxy * cross;
            }
            out[idx(g, i, j)] = acc;
        }
    }
}

void require_cartesian(const Grid2D& g) {
    if (g.kind() != Grid2D::Kind::cartesian)
        throw std::invalid_argument("timedomain: Cartesian grid required");
}

}  // namespace

double hard_dt_limit(const MaterialParams& p, const Grid2D& g) {
    const double h = std::min(g.h1(), g.h2());
    const double k12 = korteweg_rigidity(p) + nematic_rigidity(p);
    const double lambda = p.c0 * p.c0 * 8.0 / (h * h) + k12 * 64.0 / (h * h * h * h);
    return 2.0 / std::sqrt(lambda);
}

double stable_dt(const MaterialParams& p, const Grid2D& g, double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) throw std::invalid_argument("stable_dt: bad safety factor");
    return safety * hard_dt_limit(p, g);
}

void apply_wave_operator(const Grid2D& g, const MaterialParams& p, const Director& n,
                         const std::vector<double>& s, std::vector<double>& work,
                         std::vector<double>& out) {
    require_cartesian(g);
    const size_t nn = static_cast<size_t>(g.node_count());
    if (s.size() != nn) throw std::invalid_argument("apply_wave_operator: field size mismatch");
    work.resize(nn);
    out.resize(nn);
    const double k1 = korteweg_rigidity(p);
    const double k2 = nematic_rigidity(p);

    // pass 1: work = k1 lap s + k2 dnn s
    lap_real(g, s, work);
    const double c0sq = p.c0 * p.c0;
    std::vector<double> lap_s = work;  // keep lap s for the c0^2 term
    for (size_t m = 0; m < nn; ++m) work[m] *= k1;
    if (k2 != 0.0) {
        std::vector<double> dnn(nn);
        dnn_real(g, n, s, dnn);
        for (size_t m = 0; m < nn; ++m) work[m] += k2 * dnn[m];
    }
    // pass 2: out = c0^2 lap s - lap work
    lap_real(g, work, out);
    for (size_t m = 0; m < nn; ++m) out[m] = c0sq * lap_s[m] - out[m];
}

PulseState from_rest(const Grid2D& g, const MaterialParams& p, const Director& n,
                     const std::vector<double>& s0, double dt) {
    PulseState st;
    st.prev = s0;
    std::vector<double> work, l;
    apply_wave_operator(g, p, n, s0, work, l);
    st.curr = s0;
    const double half = 0.5 * dt * dt;
    for (size_t m = 0; m < s0.size(); ++m) st.curr[m] += half * l[m];
    st.t = dt;
    st.step_index = 1;
    return st;
}

void step(PulseState& state, const MaterialParams& p, const Director& n, const Grid2D& g,
          double dt, bool allow_unstable) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    if (!allow_unstable && dt > hard_dt_limit(p, g) * (1.0 + 1e-12))
        throw std::invalid_argument("step: dt exceeds the stability limit");
    static thread_local std::vector<double> work, l;
    apply_wave_operator(g, p, n, state.curr, work, l);
    const double dt2 = dt * dt;
    const size_t nn = state.curr.size();
    for (size_t m = 0; m < nn; ++m) {
        const double next = (2.0 * state.curr[m] - state.prev[m]) + dt2 * l[m];
        state.prev[m] = next;  // reuse prev as scratch, swap below
    }
    state.prev.swap(state.curr);
    state.t += dt;
    state.step_index += 1;
}

double discrete_energy(const PulseState& state, const MaterialParams& p, const Director& n,
                       const Grid2D& g, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("discrete_energy: dt must be positive");
    std::vector<double> work, l;
    apply_wave_operator(g, p, n, state.curr, work, l);
    double kin = 0.0, elastic = 0.0;
    const size_t nn = state.curr.size();
    for (size_t m = 0; m < nn; ++m) {
        const double v = (state.curr[m] - state.prev[m]) / dt;
        kin += v * v;
        elastic += l[m] * state.prev[m];
    }
    return g.h1() * g.h2() * 0.5 * (kin - elastic);
}

double sample_bilinear(const Grid2D& g, const std::vector<double>& s, const Vec2& q) {
    require_cartesian(g);
    double fx = (q.x - g.coord1(0)) / g.h1();
    double fy = (q.y - g.coord2(0)) / g.h2();
    fx = std::clamp(fx, 0.0, static_cast<double>(g.n1() - 1));
    fy = std::clamp(fy, 0.0, static_cast<double>(g.n2() - 1));
    const int i0 = std::min(static_cast<int>(fx), g.n1() - 2);
    const int j0 = std::min(static_cast<int>(fy), g.n2() - 2);
    const double ax = fx - i0, ay = fy - j0;
    const double v00 = s[idx(g, i0, j0)], v10 = s[idx(g, i0 + 1, j0)];
    const double v01 = s[idx(g, i0, j0 + 1)], v11 = s[idx(g, i0 + 1, j0 + 1)];
    return (1.0 - ax) * ((1.0 - ay) * v00 + ay * v01) + ax * ((1.0 - ay) * v10 + ay * v11);
}

double front_radius(const Grid2D& g, const std::vector<double>& s, const Vec2& center,
                    const Vec2& dir) {
    const double norm = dir.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("front_radius: zero direction");
    const Vec2 u{dir.x / norm, dir.y / norm};

    // longest radius that keeps the ray inside the domain
    double rmax = std::numeric_limits<double>::infinity();
    const double x0 = g.coord1(0), x1 = g.coord1(g.n1() - 1);
    const double y0 = g.coord2(0), y1 = g.coord2(g.n2() - 1);
    if (u.x > 0.0) rmax = std::min(rmax, (x1 - center.x) / u.x);
    if (u.x < 0.0) rmax = std::min(rmax, (x0 - center.x) / u.x);
    if (u.y > 0.0) rmax = std::min(rmax, (y1 - center.y) / u.y);
    if (u.y < 0.0) rmax = std::min(rmax, (y0 - center.y) / u.y);
    if (!std::isfinite(rmax) || rmax <= 0.0) return 0.0;

    const double dr = 0.5 * std::min(g.h1(), g.h2());
    const int m = static_cast<int>(rmax / dr);
    std::vector<double> mag(static_cast<size_t>(m) + 1);
    double peak = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double r = k * dr;
        mag[static_cast<size_t>(k)] =
            std::abs(sample_bilinear(g, s, {center.x + r * u.x, center.y + r * u.y}));
        peak = std::max(peak, mag[static_cast<size_t>(k)]);
    }
    if (peak <= 0.0) return 0.0;
    const double thresh = 0.1 * peak;
    for (int k = m; k >= 0; --k)
        if (mag[static_cast<size_t>(k)] >= thresh) return k * dr;
    return 0.0;
}

PulseRun run_pulse(const MaterialParams& p, const Director& n, const Grid2D& g,
                   const Gaussian& gaussian, double t_end,
                   const std::vector<double>& snapshot_times) {
    require_cartesian(g);
    if (g.periodic()) throw std::invalid_argument("run_pulse: bounded grid required");
    if (!(gaussian.width >= 4.0 * std::max(g.h1(), g.h2())))
        throw std::invalid_argument("run_pulse: pulse width below 4 grid spacings");
    if (!(t_end > 0.0)) throw std::invalid_argument("run_pulse: t_end must be positive");

    const size_t nn = static_cast<size_t>(g.node_count());
    std::vector<double> s0(nn);
    const double inv2w2 = 1.0 / (2.0 * gaussian.width * gaussian.width);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            const double dx = g.coord1(i) - gaussian.center.x;
            const double dy = g.coord2(j) - gaussian.center.y;
            s0[idx(g, i, j)] = gaussian.amplitude * std::exp(-(dx * dx + dy * dy) * inv2w2);
        }

    double dt = stable_dt(p, g);
    int steps = std::max(2, static_cast<int>(std::ceil(t_end / dt)));
    dt = t_end / steps;  // land exactly on t_end

    PulseRun run;
    run.dt = dt;
    run.steps = steps;
    PulseState st = from_rest(g, p, n, s0, dt);

    std::vector<double> wanted = snapshot_times;
    std::sort(wanted.begin(), wanted.end());
    size_t next_snap = 0;
    auto record_due = [&]() {
        while (next_snap < wanted.size() && st.t >= wanted[next_snap] - 0.5 * dt) {
            run.snapshots.push_back({st.t, st.curr});
            ++next_snap;
        }
    };
    record_due();
    for (int k = 1; k < steps; ++k) {
        step(st, p, n, g, dt);
        record_due();
    }
    if (run.snapshots.empty() || run.snapshots.back().t < st.t - 0.5 * dt)
        run.snapshots.push_back({st.t, st.curr});

    const Vec2 along{n.x, n.y};
    const Vec2 across{-n.y, n.x};
    const auto& final_s = run.snapshots.back().s;
    run.front.radius_along = 0.5 * (front_radius(g, final_s, gaussian.center, along) +
                                    front_radius(g, final_s, gaussian.center, {-along.x, -along.y}));
    run.front.radius_across =
        0.5 * (front_radius(g, final_s, gaussian.center, across) +
               front_radius(g, final_s, gaussian.center, {-across.x, -across.y}));
    return run;
}

double measure_phase_speed(const MaterialParams& p, double xi, double omega_target,
                           int nodes_per_wavelength) {
    if (!(omega_target > 0.0)) throw std::invalid_argument("measure_phase_speed: omega must be positive");
    if (nodes_per_wavelength < 8)
        throw std::invalid_argument("measure_phase_speed: at least 8 nodes per wavelength");

    // propagation along x, director at angle xi to it
    const Director dir(std::cos(xi), std::sin(xi));
    const double k = admissible_wavenumber(p, dir, omega_target, {1.0, 0.0});
    const double lx = 2.0 * M_PI / k;
    const int nx = nodes_per_wavelength;
    const double h = lx / nx;
    const Grid2D g = Grid2D::cartesian(0.0, lx, 0.0, 4.0 * h, nx, 4, true);

    const size_t nn = static_cast<size_t>(g.node_count());
    std::vector<double> s0(nn);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) s0[idx(g, i, j)] = std::cos(k * g.coord1(i));

    // probe at a crest: the standing wave there samples cos(omega_h t)
    const double period = 2.0 * M_PI / omega_target;
    const double dt = std::min(0.25 * hard_dt_limit(p, g), period / 256.0);
    PulseState st = from_rest(g, p, dir, s0, dt);

    // time successive zero crossings of the probe; they are half a period apart
    std::vector<double> zeros;
    double prev_val = 1.0, prev_t = 0.0;
    const double t_stop = 4.5 * period;
    while (st.t < t_stop && zeros.size() < 9) {
        const double val = st.curr[idx(g, 0, 0)];
        if (prev_val != 0.0 && ((prev_val > 0.0) != (val > 0.0))) {
            const double frac = prev_val / (prev_val - val);
            zeros.push_back(prev_t + frac * (st.t - prev_t));
        }
        prev_val = val;
        prev_t = st.t;
        step(st, p, dir, g, dt);
    }
    if (zeros.size() < 3) throw std::runtime_error("measure_phase_speed: too few zero crossings");
    const double t_span = zeros.back() - zeros.front();
    const double measured_period = 2.0 * t_span / static_cast<double>(zeros.size() - 1);
    const double omega_measured = 2.0 * M_PI / measured_period;
    return omega_measured / k;
}

}  // namespace korteweg
