#ifndef TSMLAB_GRID_HPP
#define TSMLAB_GRID_HPP

#include "tsmlab/common.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace tsmlab {

/// Uniform square-cell grid. Coordinates are generated symmetrically about
/// the centre, x_i = cx + (i - (nx-1)/2) h, so a grid centred at the origin is
/// exactly invariant under 90 degree rotation.
struct Grid {
    double x_center = 0.0;
    double y_center = 0.0;
    double h = 0.05;
    std::size_t nx = 0;
    std::size_t ny = 0;

    static Grid from_bounds(double xmin, double xmax, double ymin, double ymax, double h);

    double x(std::size_t i) const { return x_center + (static_cast<double>(i) - 0.5 * static_cast<double>(nx - 1)) * h; }
    double y(std::size_t j) const { return y_center + (static_cast<double>(j) - 0.5 * static_cast<double>(ny - 1)) * h; }
    Complex point(std::size_t i, std::size_t j) const { return {x(i), y(j)}; }
    std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
    std::size_t size() const { return nx * ny; }

    double xmin() const { return x(0); }
    double xmax() const { return x(nx - 1); }
    double ymin() const { return y(0); }
    double ymax() const { return y(ny - 1); }
};

struct GridFunction {
    Grid grid;
    std::vector<Complex> values; // values[grid.index(i, j)]

    Complex at(std::size_t i, std::size_t j) const { return values[grid.index(i, j)]; }
};

using PlaneCallable = std::function<Complex(Complex)>;

GridFunction sample_on_grid(const PlaneCallable& f, const Grid& grid);

} // namespace tsmlab

#endif
