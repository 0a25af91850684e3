#include "korteweg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "korteweg/config.hpp"
#include "korteweg/dispersion.hpp"
#include "korteweg/fields_io.hpp"
#include "korteweg/medium.hpp"
#include "korteweg/reflection.hpp"
#include "korteweg/scattering.hpp"
#include "korteweg/solver.hpp"
#include "korteweg/specfun.hpp"
#include "korteweg/timedomain.hpp"

namespace korteweg {

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// key=value sink; quiet drops everything except error lines
struct Summary {
    std::ostream& os;
    bool quiet = false;

    void line(const std::string& key, const std::string& value) {
        if (!quiet) os << key << '=' << value << '\n';
    }
    void line(const std::string& key, double value) { line(key, fmt_g(value)); }
    void line(const std::string& key, int value) { line(key, std::to_string(value)); }
    void error(const std::string& message) { os << "error=" << message << '\n'; }
};

MaterialParams load_material(const Config& cfg) {
    return MaterialParams(cfg.get_double("material.c0", 1.0), cfg.get_double("material.rho0", 1.0),
                          cfg.get_double("material.u1", 0.0), cfg.get_double("material.u2", 0.0));
}

Director load_director(const Config& cfg) {
    return Director::from_angle(cfg.get_double("director.angle", 0.0));
}

std::string out_path(const CliOptions& opt, const std::string& name) {
    std::filesystem::create_directories(opt.out_dir);
    return (std::filesystem::path(opt.out_dir) / name).string();
}

// angle between a unit direction at angle psi and the director, folded to [0, pi/2]
double angle_to_director(const Director& n, double psi) {
    const Vec2 d{std::cos(psi), std::sin(psi)};
    return std::acos(std::min(1.0, std::abs(n.dot(d))));
}

const char* kind_name(RootKind k) {
    switch (k) {
        case RootKind::propagating: return "propagating";
        case RootKind::evanescent: return "evanescent";
        default: return "mixed";
    }
}

void cmd_dispersion(const Config& cfg, const CliOptions&, Summary& out) {
    const MaterialParams p = load_material(cfg);
    const Director n = load_director(cfg);
    const double omega = cfg.get_double("wave.omega");
    const double psi = cfg.get_double("wave.psi", M_PI / 2.0);
    cfg.require_all_read();

    const double xi = angle_to_director(n, psi);
    const DispersionRoots roots = solve_wavenumbers(p, omega, xi);
    out.line("command", "dispersion");
    out.line("omega", omega);
    out.line("xi", xi);
    out.line("tau1", tau1(p));
    out.line("tau2", tau2(p, xi));
    out.line("omega_tau", roots.omega_tau);
    out.line("degenerate", roots.degenerate ? 1 : 0);
    for (int i = 0; i < 4; ++i) {
        const std::string base = "kappa" + std::to_string(i + 1);
        out.line(base + "_re", roots.kappa[static_cast<size_t>(i)].real());
        out.line(base + "_im", roots.kappa[static_cast<size_t>(i)].imag());
        out.line(base + "_kind", kind_name(roots.kind[static_cast<size_t>(i)]));
    }
    out.line("speed_ratio", speed_ratio(roots.omega_tau));
    out.line("sound_speed", p.c0 / speed_ratio(roots.omega_tau));
    out.line("penetration_depth", penetration_depth(p, omega, xi));
}

void cmd_reflect(const Config& cfg, const CliOptions&, Summary& out) {
    const MaterialParams p = load_material(cfg);
    const Director n = load_director(cfg);
    const double omega = cfg.get_double("wave.omega");
    const double theta = cfg.get_double("wave.theta", 0.0);
    const std::string kind_str = cfg.get_string("wall.kind", "soft");
    const complexd zeta{cfg.get_double("wall.zeta_re", 0.0), cfg.get_double("wall.zeta_im", 0.0)};
    cfg.require_all_read();

    if (!(theta >= 0.0 && theta < M_PI / 2.0))
        throw std::invalid_argument("wave.theta must lie in [0, pi/2)");
    InterfaceSpec iface;
    if (kind_str == "soft")
        iface.kind = WallKind::sound_soft;
    else if (kind_str == "hard")
        iface.kind = WallKind::sound_hard;
    else if (kind_str == "impedance")
        iface.kind = WallKind::impedance;
    else
        throw std::invalid_argument("wall.kind must be soft, hard or impedance");
    iface.zeta = zeta;

    const Vec2 d{std::sin(theta), -std::cos(theta)};
    const double k = admissible_wavenumber(p, n, omega, d);
    const PlaneWave incident{complexd{1.0, 0.0}, complexd{k, 0.0}, d};
    const complexd a = reflect_amplitude(incident, iface);
    const std::vector<double> samples{0.0, 0.37, 0.81, 1.29, 2.0};
    const double defect = boundary_residual(incident, a, iface, samples);

    out.line("command", "reflect");
    out.line("omega", omega);
    out.line("theta", theta);
    out.line("k", k);
    out.line("wall", kind_str);
    out.line("amplitude_re", a.real());
    out.line("amplitude_im", a.imag());
    out.line("amplitude_abs", std::abs(a));
    out.line("boundary_residual", defect);
}

void cmd_transmit(const Config& cfg, const CliOptions&, Summary& out) {
    const double n_inc = cfg.get_double("interface.n");
    const double n_t = cfg.get_double("interface.n_t");
    const double theta = cfg.get_double("wave.theta");
    const double k = cfg.get_double("wave.k", 1.0);
    cfg.require_all_read();

    const TransmittedDirection td = snell_transmit(theta, n_inc, n_t);
    out.line("command", "transmit");
    out.line("theta", theta);
    out.line("d1", td.d1);
    out.line("d2_re", td.d2.real());
    out.line("d2_im", td.d2.imag());
    out.line("total_internal", td.total_internal ? 1 : 0);
    if (const auto crit = critical_angle(n_inc, n_t)) out.line("critical_angle", *crit);
    if (td.total_internal) {
        const EvanescentTransmission ev = tir_transmitted_wave(theta, k, n_inc, n_t);
        out.line("alpha", ev.alpha);
        out.line("kt1_re", ev.k_t[0].real());
        out.line("kt2_im", ev.k_t[1].imag());
        out.line("penetration_depth", 1.0 / std::sqrt(ev.alpha));
    }
}

struct SampleRange {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

SampleRange load_sample_range(const Config& cfg, double radius) {
    SampleRange s;
    s.min = cfg.get_double("sample.min", 1.5 * radius);
    s.max = cfg.get_double("sample.max", 6.0 * radius);
    s.count = cfg.get_int("sample.count", 200);
    if (!(s.min > 0.0) || !(s.max > s.min)) throw std::invalid_argument("bad sample range");
    if (s.count < 2) throw std::invalid_argument("sample.count must be at least 2");
    return s;
}

void cmd_scatter_mie(const Config& cfg, const CliOptions& opt, Summary& out) {
    const MaterialParams p = load_material(cfg);
    const Director n = load_director(cfg);
    const double omega = cfg.get_double("wave.omega");
    const double psi = cfg.get_double("wave.psi", M_PI / 2.0);
    const double radius = cfg.get_double("geometry.radius", 1.0);
    const SampleRange sample = load_sample_range(cfg, radius);
    const double tail = cfg.get_double("mie.tail", 1e-12);
    const int jmax_override = cfg.get_int("mie.jmax", -1);
    cfg.require_all_read();
    if (!(sample.min >= radius)) throw std::invalid_argument("sample.min must not cut the disc");

    const Vec2 d{std::cos(psi), std::sin(psi)};
    const double k = admissible_wavenumber(p, n, omega, d);
    const double xi = angle_to_director(n, psi);
    const JmaxChoice choice = select_jmax(k, radius, tail);
    const int jmax = jmax_override >= 0 ? jmax_override : choice.jmax;
    const MieExpansion expansion = jacobi_anger_coeffs(k, psi, radius, jmax);

    AmplitudeCurve curve;
    curve.coord.resize(static_cast<size_t>(sample.count));
    curve.value.resize(static_cast<size_t>(sample.count));
    for (int m = 0; m < sample.count; ++m) {
        const double y = sample.min + (sample.max - sample.min) * m / (sample.count - 1);
        const double theta = y >= 0.0 ? M_PI / 2.0 : -M_PI / 2.0;
        // measurable amplitude on the axis: incident plus scattered
        const complexd inc = std::exp(complexd{0.0, 1.0} * k * std::sin(psi) * y);
        curve.coord[static_cast<size_t>(m)] = y;
        curve.value[static_cast<size_t>(m)] =
            std::abs(inc + mie_scattered_field(expansion, std::abs(y), theta));
    }
    const std::string path = out_path(opt, scatter_csv_name(p.u1, p.u2, xi));
    write_amplitude_csv(curve, path);

    out.line("command", "scatter-mie");
    out.line("omega", omega);
    out.line("k", k);
    out.line("kR", k * radius);
    out.line("xi", xi);
    out.line("jmax", jmax);
    out.line("samples", sample.count);
    out.line("csv", path);
}

// bilinear sample on a polar grid; theta wraps
complexd sample_polar(const ComplexField& f, double r, double theta) {
    const Grid2D& g = f.grid;
    double fi = (r - g.coord1(0)) / g.h1();
    fi = std::clamp(fi, 0.0, static_cast<double>(g.n1() - 1));
    const int i0 = std::min(static_cast<int>(fi), g.n1() - 2);
    const double ai = fi - i0;
    double t = std::fmod(theta - g.coord2(0), 2.0 * M_PI);
    if (t < 0.0) t += 2.0 * M_PI;
    const double ft = t / g.h2();
    int j0 = static_cast<int>(ft);
    if (j0 >= g.n2()) j0 = g.n2() - 1;
    const int j1 = (j0 + 1) % g.n2();
    const double aj = ft - j0;
    return (1.0 - ai) * ((1.0 - aj) * f.at(i0, j0) + aj * f.at(i0, j1)) +
           ai * ((1.0 - aj) * f.at(i0 + 1, j0) + aj * f.at(i0 + 1, j1));
}

void cmd_scatter_solve(const Config& cfg, const CliOptions& opt, Summary& out) {
    const MaterialParams p = load_material(cfg);
    const Director n = load_director(cfg);
    const double omega = cfg.get_double("wave.omega");
    ScatterSetup setup;
    setup.R = cfg.get_double("geometry.radius", 1.0);
    setup.psi = cfg.get_double("wave.psi", M_PI / 2.0);
    setup.points_per_wavelength = cfg.get_double("solver.points_per_wavelength", 16.0);
    setup.clearance_wavelengths = cfg.get_double("solver.clearance_wavelengths", 3.0);
    setup.layer_wavelengths = cfg.get_double("solver.layer_wavelengths", 2.0);
    setup.sigma_max = cfg.get_double("solver.sigma_max", 4.0);
    const SampleRange sample = load_sample_range(cfg, setup.R);
    const bool want_pgm = cfg.get_bool("output.field_pgm", true);
    const bool want_csv = cfg.get_bool("output.field_csv", false);
    cfg.require_all_read();

    const ScatterSolution sol = scatter_bvp(p, omega, n, setup);
    const double lambda = 2.0 * M_PI / sol.k;
    const double r_usable = sol.grid.coord1(sol.grid.n1() - 1) - setup.layer_wavelengths * lambda;
    if (sample.max > r_usable + 1e-9)
        throw std::invalid_argument("sample range reaches into the absorbing layer");

    AmplitudeCurve curve;
    curve.coord.resize(static_cast<size_t>(sample.count));
    curve.value.resize(static_cast<size_t>(sample.count));
    for (int m = 0; m < sample.count; ++m) {
        const double y = sample.min + (sample.max - sample.min) * m / (sample.count - 1);
        const double theta = y >= 0.0 ? M_PI / 2.0 : -M_PI / 2.0;
        // same axis amplitude as scatter-mie: incident plus solved scattered field
        const complexd inc = std::exp(complexd{0.0, 1.0} * sol.k * std::sin(setup.psi) * y);
        curve.coord[static_cast<size_t>(m)] = y;
        curve.value[static_cast<size_t>(m)] =
            std::abs(inc + sample_polar(sol.field.S, std::abs(y), theta));
    }
    const double xi = angle_to_director(n, setup.psi);
    const std::string path = out_path(opt, scatter_csv_name(p.u1, p.u2, xi));
    write_amplitude_csv(curve, path);
    if (want_pgm) write_field_pgm(sol.grid, sol.field.S.values, out_path(opt, "scatter_field.pgm"));
    if (want_csv) write_field_csv(sol.field.S, out_path(opt, "scatter_field.csv"));

    out.line("command", "scatter-solve");
    out.line("omega", omega);
    out.line("k", sol.k);
    out.line("kR", sol.k * setup.R);
    out.line("xi", xi);
    out.line("nr", sol.grid.n1());
    out.line("ntheta", sol.grid.n2());
    out.line("unknowns", 2 * sol.grid.node_count());
    out.line("residual", sol.field.residual);
    out.line("samples", sample.count);
    out.line("csv", path);
}

void cmd_solve(const Config& cfg, const CliOptions& opt, Summary& out) {
    const MaterialParams p = load_material(cfg);
    const Director n = load_director(cfg);
    const double omega = cfg.get_double("wave.omega");
    const double x0 = cfg.get_double("domain.x0", 0.0);
    const double x1 = cfg.get_double("domain.x1", 1.0);
    const double y0 = cfg.get_double("domain.y0", 0.0);
    const double y1 = cfg.get_double("domain.y1", 1.0);
    const int nx = cfg.get_int("domain.nx", 101);
    const int ny = cfg.get_int("domain.ny", 101);
    const std::string kind_str = cfg.get_string("bc.kind", "soft");
    const complexd zeta{cfg.get_double("bc.zeta_re", 0.0), cfg.get_double("bc.zeta_im", 0.0)};
    const double sx = cfg.get_double("source.x", 0.5 * (x0 + x1));
    const double sy = cfg.get_double("source.y", 0.5 * (y0 + y1));
    const double sw = cfg.get_double("source.width", 0.05 * std::min(x1 - x0, y1 - y0));
    const double sa = cfg.get_double("source.amplitude", 1.0);
    const bool want_pgm = cfg.get_bool("output.field_pgm", true);
    const bool want_csv = cfg.get_bool("output.field_csv", false);
    cfg.require_all_read();

    BcKind kind;
    if (kind_str == "soft")
        kind = BcKind::sound_soft;
    else if (kind_str == "hard")
        kind = BcKind::sound_hard;
    else if (kind_str == "impedance")
        kind = BcKind::impedance;
    else
        throw std::invalid_argument("bc.kind must be soft, hard or impedance");
    if (!(sw > 0.0)) throw std::invalid_argument("source.width must be positive");

    const Grid2D grid = Grid2D::cartesian(x0, x1, y0, y1, nx, ny);
    const double inv2w2 = 1.0 / (2.0 * sw * sw);
    const auto source = [=](const Vec2& q) {
        const double dx = q.x - sx, dy = q.y - sy;
        return complexd{sa * std::exp(-(dx * dx + dy * dy) * inv2w2), 0.0};
    };
    MixedSystem sys = assemble(p, omega, n, grid, std::nullopt, source);
    apply_bc(sys, BoundarySpec::uniform(kind, zeta));
    const SolveResult res = solve(sys);

    double max_abs = 0.0;
    for (const auto& v : res.S.values) max_abs = std::max(max_abs, std::abs(v));
    if (want_pgm) write_field_pgm(grid, res.S.values, out_path(opt, "field.pgm"));
    if (want_csv) write_field_csv(res.S, out_path(opt, "field.csv"));

    out.line("command", "solve");
    out.line("omega", omega);
    out.line("unknowns", 2 * grid.node_count());
    out.line("residual", res.residual);
    out.line("max_abs_S", max_abs);
}

void cmd_pulse(const Config& cfg, const CliOptions& opt, Summary& out) {
    const MaterialParams p = load_material(cfg);
    const Director n = load_director(cfg);
    const double half_width = cfg.get_double("domain.half_width");
    const int nn = cfg.get_int("domain.n", 301);
    Gaussian gauss;
    gauss.width = cfg.get_double("pulse.width");
    gauss.amplitude = cfg.get_double("pulse.amplitude", 1.0);
    const double t_end = cfg.get_double("pulse.t_end");
    const int snapshots = cfg.get_int("pulse.snapshots", 4);
    const bool want_pgm = cfg.get_bool("output.pgm", true);
    cfg.require_all_read();
    if (!(half_width > 0.0)) throw std::invalid_argument("domain.half_width must be positive");
    if (snapshots < 1) throw std::invalid_argument("pulse.snapshots must be at least 1");

    const Grid2D grid = Grid2D::cartesian(-half_width, half_width, -half_width, half_width, nn, nn);
    std::vector<double> times;
    for (int m = 1; m <= snapshots; ++m) times.push_back(t_end * m / snapshots);
    const PulseRun run = run_pulse(p, n, grid, gauss, t_end, times);

    if (want_pgm)
        for (size_t m = 0; m < run.snapshots.size(); ++m) {
            char name[64];
            std::snprintf(name, sizeof name, "pulse_%03zu.pgm", m);
            write_field_pgm(grid, run.snapshots[m].s, out_path(opt, name));
        }

    out.line("command", "pulse");
    out.line("dt", run.dt);
    out.line("steps", run.steps);
    out.line("snapshots", static_cast<int>(run.snapshots.size()));
    out.line("front_along", run.front.radius_along);
    out.line("front_across", run.front.radius_across);
    if (run.front.radius_across > 0.0)
        out.line("axis_ratio", run.front.radius_along / run.front.radius_across);
}

void cmd_specfun_check(const Config& cfg, const CliOptions&, Summary& out) {
    const double x_min = cfg.get_double("check.x_min", 0.1);
    const double x_max = cfg.get_double("check.x_max", 50.0);
    const int x_count = cfg.get_int("check.x_count", 60);
    const int j_max = cfg.get_int("check.j_max", 50);
    cfg.require_all_read();
    if (!(x_min > 0.0) || !(x_max > x_min) || x_count < 2 || j_max < 0)
        throw std::invalid_argument("bad specfun-check range");

    double worst = 0.0;
    int worst_j = 0;
    double worst_x = x_min;
    const double ratio = std::pow(x_max / x_min, 1.0 / (x_count - 1));
    for (int j = 0; j <= j_max; ++j) {
        double x = x_min;
        for (int m = 0; m < x_count; ++m, x *= ratio) {
            const double defect = wronskian_defect(j, x);
            if (!std::isfinite(defect))
                throw std::runtime_error("non-finite Wronskian defect at j=" + std::to_string(j) +
                                         ", x=" + fmt_g(x));
            if (defect > worst) {
                worst = defect;
                worst_j = j;
                worst_x = x;
            }
        }
    }
    out.line("command", "specfun-check");
    out.line("samples", (j_max + 1) * x_count);
    out.line("max_wronskian_defect", worst);
    out.line("worst_j", worst_j);
    out.line("worst_x", worst_x);
    if (worst > 1e-9) throw std::runtime_error("Wronskian defect above 1e-9");
}

using Handler = void (*)(const Config&, const CliOptions&, Summary&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"dispersion", cmd_dispersion},  {"reflect", cmd_reflect},
        {"transmit", cmd_transmit},      {"scatter-mie", cmd_scatter_mie},
        {"scatter-solve", cmd_scatter_solve}, {"solve", cmd_solve},
        {"pulse", cmd_pulse},            {"specfun-check", cmd_specfun_check},
    };
    return table;
}

}  // namespace

std::string scatter_csv_name(double u1, double u2, double xi) {
    const auto short_form = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };
    char xbuf[40];
    std::snprintf(xbuf, sizeof xbuf, "%.2f", xi);
    std::string xs(xbuf);
    if (xs.back() == '0') xs.pop_back();  // "0.00" -> "0.0", "1.57" unchanged
    return "pml_" + short_form(u1) + "_" + short_form(u2) + "_n1_" + xs + "_n2_" + xs + ".csv";
}

const char* usage() {
    return "usage: hkwave <command> [--config <path>] [--out <dir>]\n"
           "              [--override section.key=value]... [--quiet]\n"
           "commands:\n"
           "  dispersion     wavenumber roots, speed ratio, penetration depth\n"
           "  reflect        reflection amplitude off a flat wall\n"
           "  transmit       Snell refraction / total internal reflection\n"
           "  scatter-mie    series solution for a sound-soft disc, amplitude CSV\n"
           "  scatter-solve  finite-difference scattering with absorbing layer\n"
           "  solve          driven Helmholtz-Korteweg problem on a rectangle\n"
           "  pulse          leapfrog Gaussian-pulse run, snapshot pixmaps\n"
           "  specfun-check  Bessel cross-check via the Wronskian identity\n";
}

int run(const CliOptions& opt, std::ostream& summary) {
    Summary out{summary, opt.quiet};
    const auto& table = handlers();
    const auto it = table.find(opt.command);
    if (it == table.end()) {
        out.error("unknown command '" + opt.command + "'");
        if (!opt.quiet) summary << usage();
        return 1;
    }

    Config cfg;
    try {
        if (!opt.config_path.empty()) cfg = Config::parse_file(opt.config_path);
        for (const auto& o : opt.overrides) cfg.apply_override(o);
    } catch (const std::exception& e) {
        out.error(e.what());
        return 1;
    }

    try {
        it->second(cfg, opt, out);
    } catch (const std::invalid_argument& e) {
        out.error(e.what());
        return 1;
    } catch (const std::exception& e) {
        out.error(e.what());
        return 2;
    }
    return 0;
}

}  // namespace korteweg
