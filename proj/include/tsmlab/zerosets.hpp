#ifndef TSMLAB_ZEROSETS_HPP
#define TSMLAB_ZEROSETS_HPP

#include "tsmlab/common.hpp"
#include "tsmlab/grid.hpp"
#include "tsmlab/plane_function.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tsmlab {

struct CircleLocus {
    double radius = 0.0;
    std::string exact; // closed form when available, e.g. "sqrt(2*(2 - sqrt(2)))"
};

struct PredictedZeroSet {
    bool everything = false;  // every Q_k vanishes identically
    bool origin = false;      // P^{-1}(0) = {0}
    std::vector<CircleLocus> circles;
    std::vector<unsigned> contributing_k;
    std::vector<unsigned> near_zero_k; // scalar below the relative threshold; not decided
};

struct ZeroSetReport {
    Grid grid;
    unsigned k_max = 0;
    double tolerance = 1e-6;
    std::vector<double> max_abs; // max_k |Q_k| at each grid point
    std::vector<bool> is_zero;
    std::vector<Complex> zero_points;
    PredictedZeroSet predicted;
    bool has_prediction = false;
    double distance = 0.0;
    bool matches = false;

    nlohmann::ordered_json to_json() const;
    /// CSV with header x,y,max_abs_Qk.
    std::string to_csv() const;
};

/// Q_k from the closed forms for k <= k_max. A point belongs to the zero set if
/// every Q_k is below tol there or has an estimated distance |Q|/|DQ| to its
/// zero set of at most h/2, with |DQ| the operator norm of the real Jacobian
/// from central differences.
ZeroSetReport zero_set_grid(const PlaneFunction& f, unsigned k_max, const Grid& grid, double tol);

/// Predicted S(f) for a single type term: the polynomial locus plus circles
/// r = sqrt(2u) at common zeros u of the contributing Laguerre polynomials.
PredictedZeroSet type_function_zero_set(const TypeTerm& term, unsigned k_max);

/// Hausdorff-style comparison on the grid. Returns true when every computed
/// point is within one cell diagonal (sqrt(2) h) of the prediction and every
/// grid point within h/2 of the prediction is within a cell diagonal of a
/// computed point. `distance` receives the worse
/// of the two one-sided distances.
bool verify_prediction(const ZeroSetReport& report, const PredictedZeroSet& predicted, double& distance);

/// Convenience: fill report.predicted/matches/distance for single-term f.
void attach_prediction(ZeroSetReport& report, const PlaneFunction& f);

nlohmann::ordered_json predicted_to_json(const PredictedZeroSet& p);

} // namespace tsmlab

#endif
