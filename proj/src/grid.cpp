#include "korteweg/grid.hpp"

#include <cmath>

namespace korteweg {

Grid2D Grid2D::cartesian(double x0, double x1, double y0, double y1, int nx, int ny,
                         bool periodic) {
    if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("Grid2D: empty extents");
    if (nx < 4 || ny < 4) throw std::invalid_argument("Grid2D: need at least 4 nodes per axis");
    Grid2D g;
    g.kind_ = Kind::cartesian;
    g.periodic_ = periodic;
    g.n1_ = nx;
    g.n2_ = ny;
    g.a1_ = x0;
    g.a2_ = y0;
    // periodic grids treat x1/y1 as the wrap point, so the last node stops short
    g.h1_ = (x1 - x0) / (periodic ? nx : nx - 1);
    g.h2_ = (y1 - y0) / (periodic ? ny : ny - 1);
    return g;
}

Grid2D Grid2D::polar_annulus(double r_inner, double r_outer, int nr, int ntheta) {
    if (!(r_inner > 0.0) || !(r_outer > r_inner))
        throw std::invalid_argument("Grid2D: invalid annulus radii");
    if (nr < 4 || ntheta < 8) throw std::invalid_argument("Grid2D: annulus too coarse");
    Grid2D g;
    g.kind_ = Kind::polar;
    g.periodic_ = false;  // radial direction is bounded; theta wraps implicitly
    g.n1_ = nr;
    g.n2_ = ntheta;
    g.a1_ = r_inner;
    g.a2_ = 0.0;
    g.h1_ = (r_outer - r_inner) / (nr - 1);
    g.h2_ = 2.0 * M_PI / ntheta;
    return g;
}

Vec2 Grid2D::point(int i, int j) const {
    if (kind_ == Kind::cartesian) return {coord1(i), coord2(j)};
    const double r = coord1(i);
    const double t = coord2(j);
    return {r * std::cos(t), r * std::sin(t)};
}

bool Grid2D::on_boundary(int i, int j) const {
    if (kind_ == Kind::polar) return i == 0 || i == n1_ - 1;
    if (periodic_) return false;
    return i == 0 || i == n1_ - 1 || j == 0 || j == n2_ - 1;
}

double Grid2D::max_spacing() const {
    if (kind_ == Kind::cartesian) return std::max(h1_, h2_);
    const double r_out = a1_ + (n1_ - 1) * h1_;
    return std::max(h1_, r_out * h2_);
}

}  // namespace korteweg
