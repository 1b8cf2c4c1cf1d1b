#include "tsmlab/grid.hpp"

#include "tsmlab/parallel.hpp"

#include <cmath>

namespace tsmlab {

Grid Grid::from_bounds(double xmin, double xmax, double ymin, double ymax, double h) {
    if (!(h > 0.0) || !(xmax >= xmin) || !(ymax >= ymin))
        fail(ErrorCode::InvalidArgument, "grid: need h > 0 and ordered bounds");
    Grid g;
    g.h = h;
    g.nx = static_cast<std::size_t>(std::llround((xmax - xmin) / h)) + 1;
    g.ny = static_cast<std::size_t>(std::llround((ymax - ymin) / h)) + 1;
    g.x_center = 0.5 * (xmin + xmax);
    g.y_center = 0.5 * (ymin + ymax);
    return g;
}

GridFunction sample_on_grid(const PlaneCallable& f, const Grid& grid) {
    GridFunction out;
    out.grid = grid;
    out.values.resize(grid.size());
    parallel_for(grid.ny, [&](std::size_t j) {
        for (std::size_t i = 0; i < grid.nx; ++i)
            out.values[grid.index(i, j)] = f(grid.point(i, j));
    });
    return out;
}

} // namespace tsmlab
