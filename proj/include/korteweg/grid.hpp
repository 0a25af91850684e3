#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "korteweg/medium.hpp"

namespace korteweg {

// Structured 2-D grid, either a Cartesian rectangle (optionally fully
// periodic) or a polar annulus (always periodic in theta, no duplicated seam).
class Grid2D {
  public:
    enum class Kind { cartesian, polar };

    static Grid2D cartesian(double x0, double x1, double y0, double y1, int nx, int ny,
                            bool periodic = false);
    static Grid2D polar_annulus(double r_inner, double r_outer, int nr, int ntheta);

    Kind kind() const { return kind_; }
    bool periodic() const { return periodic_; }
    int n1() const { return n1_; }  // x resp. r nodes
    int n2() const { return n2_; }  // y resp. theta nodes
    double h1() const { return h1_; }
    double h2() const { return h2_; }
    int node_count() const { return n1_ * n2_; }
    int index(int i, int j) const { return i * n2_ + j; }

    double coord1(int i) const { return a1_ + i * h1_; }  // x or r
    double coord2(int j) const { return a2_ + j * h2_; }  // y or theta
    Vec2 point(int i, int j) const;

    // boundary predicate: Cartesian edge nodes, or the polar rims i=0 / i=n1-1
    bool on_boundary(int i, int j) const;

    // largest spacing relevant for the meshing guard (polar: outer-rim arc)
    double max_spacing() const;

  private:
    Kind kind_ = Kind::cartesian;
    bool periodic_ = false;
    int n1_ = 0, n2_ = 0;
    double a1_ = 0.0, a2_ = 0.0;
    double h1_ = 0.0, h2_ = 0.0;
};

// Complex nodal field bound to a grid.
struct ComplexField {
    enum class Role { condensation, auxiliary };

    Grid2D grid;
    Role role = Role::condensation;
    std::vector<std::complex<double>> values;

    ComplexField() = default;
    ComplexField(const Grid2D& g, Role r)
        : grid(g), role(r), values(static_cast<size_t>(g.node_count()), {0.0, 0.0}) {}

    std::complex<double>& at(int i, int j) { return values[static_cast<size_t>(grid.index(i, j))]; }
    const std::complex<double>& at(int i, int j) const {
        return values[static_cast<size_t>(grid.index(i, j))];
    }
};

}  // namespace korteweg
