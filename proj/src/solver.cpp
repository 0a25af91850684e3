#include "korteweg/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>
#include <cmath>
#include <stdexcept>

namespace korteweg {

namespace {

const complexd kI{0.0, 1.0};

struct Entry {
    int col;
    double w;
};
using Stencil = std::vector<Entry>;

void add(Stencil& st, int col, double w) {
    for (auto& e : st)
        if (e.col == col) {
            e.w += w;
            return;
        }
    st.push_back({col, w});
}

int wrap(int j, int n) { return (j % n + n) % n; }

// Laplacian stencil at an interior node, in node-index space (weights on S).
Stencil laplacian_stencil(const Grid2D& g, int i, int j) {
    Stencil st;
    const double h1 = g.h1(), h2 = g.h2();
    if (g.kind() == Grid2D::Kind::cartesian) {
        const int jm = g.periodic() ? wrap(j - 1, g.n2()) : j - 1;
        const int jp = g.periodic() ? wrap(j + 1, g.n2()) : j + 1;
        const int im = g.periodic() ? wrap(i - 1, g.n1()) : i - 1;
        const int ip = g.periodic() ? wrap(i + 1, g.n1()) : i + 1;
        add(st, g.index(im, j), 1.0 / (h1 * h1));
        add(st, g.index(ip, j), 1.0 / (h1 * h1));
        add(st, g.index(i, jm), 1.0 / (h2 * h2));
        add(st, g.index(i, jp), 1.0 / (h2 * h2));
        add(st, g.index(i, j), -2.0 / (h1 * h1) - 2.0 / (h2 * h2));
        return st;
    }
    // polar: S_rr + S_r / r + S_tt / r^2, theta periodic
    const double r = g.coord1(i);
    const int jm = wrap(j - 1, g.n2());
    const int jp = wrap(j + 1, g.n2());
    add(st, g.index(i - 1, j), 1.0 / (h1 * h1) - 1.0 / (2.0 * h1 * r));
    add(st, g.index(i + 1, j), 1.0 / (h1 * h1) + 1.0 / (2.0 * h1 * r));
    add(st, g.index(i, j), -2.0 / (h1 * h1) - 2.0 / (r * r * h2 * h2));
    add(st, g.index(i, jm), 1.0 / (r * r * h2 * h2));
    add(st, g.index(i, jp), 1.0 / (r * r * h2 * h2));
    return st;
}

// div((n(x)n) grad S) for a constant unit director; equals n.(HS)n.
Stencil dnn_stencil(const Grid2D& g, const Director& n, int i, int j) {
    Stencil st;
    const double h1 = g.h1(), h2 = g.h2();
    if (g.kind() == Grid2D::Kind::cartesian) {
        const double axx = n.x * n.x, ayy = n.y * n.y, axy = n.x * n.y;
        const int jm = g.periodic() ? wrap(j - 1, g.n2()) : j - 1;
        const int jp = g.periodic() ? wrap(j + 1, g.n2()) : j + 1;
        const int im = g.periodic() ? wrap(i - 1, g.n1()) : i - 1;
        const int ip = g.periodic() ? wrap(i + 1, g.n1()) : i + 1;
        add(st, g.index(im, j), axx / (h1 * h1));
        add(st, g.index(ip, j), axx / (h1 * h1));
        add(st, g.index(i, j), -2.0 * axx / (h1 * h1) - 2.0 * ayy / (h2 * h2));
        add(st, g.index(i, jm), ayy / (h2 * h2));
        add(st, g.index(i, jp), ayy / (h2 * h2));
        const double cxy = 2.0 * axy / (4.0 * h1 * h2);
        add(st, g.index(ip, jp), cxy);
        add(st, g.index(im, jm), cxy);
        add(st, g.index(ip, jm), -cxy);
        add(st, g.index(im, jp), -cxy);
        return st;
    }
    // polar orthonormal-frame Hessian:
    //   Dnn = a^2 S_rr + 2ab (S_rt/r - S_t/r^2) + b^2 (S_tt/r^2 + S_r/r),
    // a = n.e_r, b = n.e_theta
    const double r = g.coord1(i);
    const double t = g.coord2(j);
    const double c = std::cos(t), s = std::sin(t);
    const double a = n.x * c + n.y * s;
    const double b = -n.x * s + n.y * c;
    const int jm = wrap(j - 1, g.n2());
    const int jp = wrap(j + 1, g.n2());
    // a^2 S_rr
    add(st, g.index(i - 1, j), a * a / (h1 * h1));
    add(st, g.index(i + 1, j), a * a / (h1 * h1));
    add(st, g.index(i, j), -2.0 * a * a / (h1 * h1));
    // b^2 (S_tt / r^2 + S_r / r)
    add(st, g.index(i, jm), b * b / (r * r * h2 * h2));
    add(st, g.index(i, jp), b * b / (r * r * h2 * h2));
    add(st, g.index(i, j), -2.0 * b * b / (r * r * h2 * h2));
    add(st, g.index(i - 1, j), -b * b / (2.0 * h1 * r));
    add(st, g.index(i + 1, j), b * b / (2.0 * h1 * r));
    // 2ab (S_rt / r - S_t / r^2)
    const double crt = 2.0 * a * b / (4.0 * h1 * h2 * r);
    add(st, g.index(i + 1, jp), crt);
    add(st, g.index(i - 1, jm), crt);
    add(st, g.index(i + 1, jm), -crt);
    add(st, g.index(i - 1, jp), -crt);
    const double ct = 2.0 * a * b / (2.0 * h2 * r * r);
    add(st, g.index(i, jp), -ct);
    add(st, g.index(i, jm), ct);
    return st;
}

double sigma_at(const Grid2D& g, const AbsorbingLayerSpec& layer, int i, int j) {
    if (layer.width <= 0.0 || layer.sigma_max <= 0.0) return 0.0;
    double depth = 0.0;
    if (g.kind() == Grid2D::Kind::polar) {
        const double r = g.coord1(i);
        const double r_out = g.coord1(g.n1() - 1);
        depth = std::max(0.0, r - (r_out - layer.width));
    } else {
        const double x = g.coord1(i), y = g.coord2(j);
        const double x0 = g.coord1(0), x1 = g.coord1(g.n1() - 1);
        const double y0 = g.coord2(0), y1 = g.coord2(g.n2() - 1);
        depth = std::max({0.0, x0 + layer.width - x, x - (x1 - layer.width),
                          y0 + layer.width - y, y - (y1 - layer.width)});
    }
    if (depth <= 0.0) return 0.0;
    return layer.sigma_max * std::pow(depth / layer.width, layer.ramp);
}

// meshing guard: at least 8 points per shortest propagating wavelength
void check_mesh(const MaterialParams& p, double omega, const Grid2D& g) {
    if (!(omega > 0.0)) return;
    const double k_max = omega / p.c0 * speed_ratio(omega * tau1(p));
    if (k_max <= 0.0) return;
    const double limit = 2.0 * M_PI / k_max / 8.0;
    // rounding allowance: grids built to exactly 8 points per wavelength pass
    if (g.max_spacing() > limit * (1.0 + 1e-9))
        throw std::invalid_argument("assemble: grid coarser than 8 points per wavelength");
}

}  // namespace

BcData scattering_bc_data(const PlaneWave& incident, const MaterialParams& p, const Director& n) {
    const double k1 = korteweg_rigidity(p);
    const double k2 = nematic_rigidity(p);
    const double dn = n.dot(incident.d);
    BcData data;
    data.g = [incident](const Vec2& x) { return -incident.value(x); };
    // v_inc = (k1 Lap + k2 Dnn) S_inc = -(k1 + k2 (d.n)^2) k^2 S_inc
    const complexd vfac = -(k1 + k2 * dn * dn) * incident.k * incident.k;
    data.g2 = [incident, vfac](const Vec2& x) { return -vfac * incident.value(x); };
    return data;
}

MixedSystem assemble(const MaterialParams& p, double omega, const Director& n, const Grid2D& g,
                     const std::optional<AbsorbingLayerSpec>& layer,
                     const std::function<complexd(const Vec2&)>& volume_source) {
    if (omega < 0.0) throw std::invalid_argument("assemble: omega must be non-negative");
    check_mesh(p, omega, g);

    MixedSystem sys{.A = {}, .rhs = {}, .grid = g, .params = p, .n = n, .omega = omega,
                    .row_tag = {}};
    const int nn = g.node_count();
    const double k1 = korteweg_rigidity(p);
    const double k2 = nematic_rigidity(p);

    std::vector<Eigen::Triplet<complexd>> trip;
    trip.reserve(static_cast<size_t>(nn) * 22);
    sys.rhs = VectorXcd::Zero(2 * nn);
    sys.row_tag.assign(static_cast<size_t>(2 * nn), 0);

    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) {
            const int rs = 2 * g.index(i, j);
            const int rv = rs + 1;
            sys.row_tag[static_cast<size_t>(rv)] = 1;
            if (g.on_boundary(i, j)) {
                // boundary rows are stamped by apply_bc; keep the system
                // non-singular in the meantime
                sys.row_tag[static_cast<size_t>(rs)] = 2;
                sys.row_tag[static_cast<size_t>(rv)] = 2;
                trip.emplace_back(rs, rs, complexd(1.0, 0.0));
                trip.emplace_back(rv, rv, complexd(1.0, 0.0));
                continue;
            }
            const complexd mass =
                -omega * omega *
                (complexd(1.0, 0.0) +
                 (layer ? kI * sigma_at(g, *layer, i, j) / omega : complexd(0.0, 0.0)));
            trip.emplace_back(rs, 2 * g.index(i, j), mass);

            const Stencil lap = laplacian_stencil(g, i, j);
            for (const auto& e : lap) {
                trip.emplace_back(rs, 2 * e.col, complexd(-p.c0 * p.c0 * e.w, 0.0));
                trip.emplace_back(rs, 2 * e.col + 1, complexd(e.w, 0.0));
                if (k1 != 0.0) trip.emplace_back(rv, 2 * e.col, complexd(-k1 * e.w, 0.0));
            }
            trip.emplace_back(rv, rv, complexd(1.0, 0.0));
            if (k2 != 0.0) {
                const Stencil dnn = dnn_stencil(g, n, i, j);
                for (const auto& e : dnn)
                    trip.emplace_back(rv, 2 * e.col, complexd(-k2 * e.w, 0.0));
            }
            if (volume_source) sys.rhs[rs] = volume_source(g.point(i, j));
        }
    }

    sys.A.resize(2 * nn, 2 * nn);
    sys.A.setFromTriplets(trip.begin(), trip.end());
    return sys;
}

namespace {

// one-sided second-order normal derivative rows for hard/impedance edges
void stamp_derivative_row(std::vector<Eigen::Triplet<complexd>>& trip, const MixedSystem& sys,
                          int row0, int c0, int c1, int c2, double h, complexd robin) {
    // dS/dnu - i zeta S = 0 with dS/dnu = (3 S0 - 4 S1 + S2) / (2h) toward the interior
    trip.emplace_back(row0, c0, complexd(3.0 / (2.0 * h), 0.0) - kI * robin);
    trip.emplace_back(row0, c1, complexd(-4.0 / (2.0 * h), 0.0));
    trip.emplace_back(row0, c2, complexd(1.0 / (2.0 * h), 0.0));
    (void)sys;
}

}  // namespace

void apply_bc(MixedSystem& sys, const BoundarySpec& bc, const BcData& data) {
    const Grid2D& g = sys.grid;
    if (g.periodic()) return;  // fully periodic grids have no boundary rows

    // collect boundary rows as triplets, then merge with the interior matrix
    std::vector<Eigen::Triplet<complexd>> trip;
    trip.reserve(static_cast<size_t>(sys.A.nonZeros()) + 6u * (g.n1() + g.n2()));

    // keep all non-boundary rows
    for (int kcol = 0; kcol < sys.A.outerSize(); ++kcol)
        for (SparseMatrixXcd::InnerIterator it(sys.A, kcol); it; ++it)
            if (sys.row_tag[static_cast<size_t>(it.row())] != 2)
                trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                                  it.value());

    const bool polar = g.kind() == Grid2D::Kind::polar;
    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) {
            if (!g.on_boundary(i, j)) continue;
            // edge selection: polar [inner, outer]; cartesian [left, right, bottom, top]
            int e;
            if (polar) {
                e = (i == 0) ? 0 : 1;
            } else if (i == 0 || i == g.n1() - 1) {
                e = (i == 0) ? 0 : 1;
            } else {
                e = (j == 0) ? 2 : 3;
            }
            // Dirichlet edges win the corner when kinds differ there
            if (!polar && (i == 0 || i == g.n1() - 1) && (j == 0 || j == g.n2() - 1)) {
                const int ej = (j == 0) ? 2 : 3;
                if (bc.edge[static_cast<size_t>(ej)].kind == BcKind::sound_soft) e = ej;
            }
            const EdgeBc& eb = bc.edge[static_cast<size_t>(e)];
            const int rs = 2 * g.index(i, j);
            const int rv = rs + 1;
            const Vec2 x = g.point(i, j);

            if (eb.kind == BcKind::sound_soft) {
                trip.emplace_back(rs, rs, complexd(1.0, 0.0));
                trip.emplace_back(rv, rv, complexd(1.0, 0.0));
                sys.rhs[rs] = data.g ? data.g(x) : complexd(0.0, 0.0);
                sys.rhs[rv] = data.g2 ? data.g2(x) : complexd(0.0, 0.0);
                continue;
            }

            // normal points out of the fluid: one-sided stencil runs inward
            int i1 = i, j1 = j, i2 = i, j2 = j;
            double h;
            if (polar || i == 0 || i == g.n1() - 1) {
                const int dir = (i == 0) ? 1 : -1;
                i1 = i + dir;
                i2 = i + 2 * dir;
                h = g.h1();
            } else {
                const int dir = (j == 0) ? 1 : -1;
                j1 = j + dir;
                j2 = j + 2 * dir;
                h = g.h2();
            }
            const complexd robin = (eb.kind == BcKind::impedance) ? eb.zeta : complexd(0.0, 0.0);
            stamp_derivative_row(trip, sys, rs, rs, 2 * g.index(i1, j1), 2 * g.index(i2, j2), h,
                                 robin);
            stamp_derivative_row(trip, sys, rv, rv, 2 * g.index(i1, j1) + 1,
                                 2 * g.index(i2, j2) + 1, h, robin);
            sys.rhs[rs] = complexd(0.0, 0.0);
            sys.rhs[rv] = complexd(0.0, 0.0);
        }
    }

    SparseMatrixXcd merged(sys.A.rows(), sys.A.cols());
    merged.setFromTriplets(trip.begin(), trip.end());
    sys.A = std::move(merged);
}

SolveResult solve(const MixedSystem& sys) {
    const int n = static_cast<int>(sys.A.rows());
    VectorXcd x;
    SparseMatrixXcd A = sys.A;
    A.makeCompressed();

    constexpr int kDirectLimit = 150000;
    const auto direct = [&]() -> bool {
        Eigen::SparseLU<SparseMatrixXcd> lu;
        lu.compute(A);
        if (lu.info() != Eigen::Success) return false;
        x = lu.solve(sys.rhs);
        return lu.info() == Eigen::Success;
    };
    const auto iterative = [&]() -> bool {
        Eigen::BiCGSTAB<SparseMatrixXcd, Eigen::IncompleteLUT<complexd>> it;
        it.preconditioner().setDroptol(1e-5);
        it.preconditioner().setFillfactor(30);
        it.setTolerance(1e-12);
        it.setMaxIterations(400);
        it.compute(A);
        if (it.info() != Eigen::Success) return false;
        x = it.solve(sys.rhs);
        return it.error() <= 1e-9;
    };

    bool solved = false;
    if (n <= kDirectLimit) {
        solved = direct();
        if (!solved) solved = iterative();
    } else {
        solved = iterative();
        if (!solved) solved = direct();
    }
    if (!solved) throw std::runtime_error("solve: linear solver failed");

    const double bnorm = sys.rhs.norm();
    const double res = (A * x - sys.rhs).norm() / (bnorm > 0.0 ? bnorm : 1.0);
    if (!(res < 1e-8))
        throw std::runtime_error("solve: relative residual above 1e-8");

    SolveResult out{ComplexField(sys.grid, ComplexField::Role::condensation),
                    ComplexField(sys.grid, ComplexField::Role::auxiliary), res};
    for (int idx = 0; idx < sys.grid.node_count(); ++idx) {
        out.S.values[static_cast<size_t>(idx)] = x[2 * idx];
        out.v.values[static_cast<size_t>(idx)] = x[2 * idx + 1];
    }
    return out;
}

ScatterSolution scatter_bvp(const MaterialParams& p, double omega, const Director& n,
                            const ScatterSetup& setup) {
    const double k = admissible_wavenumber(p, n, omega, {std::cos(setup.psi), std::sin(setup.psi)});
    const double lambda = 2.0 * M_PI / k;
    const double width = setup.layer_wavelengths * lambda;
    const double r_out = setup.R + setup.clearance_wavelengths * lambda + width;
    if (r_out < setup.R + 3.0 * lambda + width - 1e-12)
        throw std::invalid_argument("scatter_bvp: outer radius under R + 3 wavelengths + layer");

    const double h_target = lambda / setup.points_per_wavelength;
    const int nr = std::max(8, static_cast<int>(std::ceil((r_out - setup.R) / h_target)) + 1);
    const int ntheta = std::max(16, static_cast<int>(std::ceil(2.0 * M_PI * r_out / h_target)));
    const Grid2D grid = Grid2D::polar_annulus(setup.R, r_out, nr, ntheta);

    const PlaneWave incident{complexd(1.0, 0.0), complexd(k, 0.0),
                             {std::cos(setup.psi), std::sin(setup.psi)}};
    MixedSystem sys = assemble(p, omega, n, grid,
                               AbsorbingLayerSpec{width, setup.sigma_max * omega, 3});

    // incident data drives the obstacle rim only; the outer rim is homogeneous
    // (the absorber has already flattened the scattered wave there)
    BcData data = scattering_bc_data(incident, p, n);
    const double r_cut = setup.R + 0.5 * grid.h1();
    const auto inner_only = [r_cut](std::function<complexd(const Vec2&)> f) {
        return [r_cut, f = std::move(f)](const Vec2& x) -> complexd {
            return std::hypot(x.x, x.y) <= r_cut ? f(x) : complexd(0.0, 0.0);
        };
    };
    data.g = inner_only(std::move(data.g));
    data.g2 = inner_only(std::move(data.g2));

    apply_bc(sys, BoundarySpec::uniform(BcKind::sound_soft), data);
    ScatterSolution out{solve(sys), grid, k};
    return out;
}

std::vector<complexd> apply_laplacian(const Grid2D& g, const std::vector<complexd>& f) {
    std::vector<complexd> out(f.size(), complexd(0.0, 0.0));
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            if (g.on_boundary(i, j)) continue;
            complexd acc{0.0, 0.0};
            for (const auto& e : laplacian_stencil(g, i, j)) acc += e.w * f[static_cast<size_t>(e.col)];
            out[static_cast<size_t>(g.index(i, j))] = acc;
        }
    return out;
}

std::vector<complexd> apply_dnn(const Grid2D& g, const Director& n,
                                const std::vector<complexd>& f) {
    std::vector<complexd> out(f.size(), complexd(0.0, 0.0));
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            if (g.on_boundary(i, j)) continue;
            complexd acc{0.0, 0.0};
            for (const auto& e : dnn_stencil(g, n, i, j)) acc += e.w * f[static_cast<size_t>(e.col)];
            out[static_cast<size_t>(g.index(i, j))] = acc;
        }
    return out;
}

}  // namespace korteweg
