#include "dtsp/instance.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dtsp/errors.hpp"

namespace dtsp {

double Instance::min_pairwise_distance() const {
    double best = std::numeric_limits<double>::infinity();
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best = std::min(best, distance(points[i], points[j]));
    return best;
}

void Instance::validate_for_tour() const {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw SeparationTooSmall("rho must be positive and finite, got " + std::to_string(rho));
    if (size() < 3)
        throw SeparationTooSmall("a tour instance needs at least 3 points, got " +
                                 std::to_string(size()));
    for (const auto& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw SeparationTooSmall("point coordinates must be finite");
    const double d = min_pairwise_distance();
    if (d < 4.0 * rho)
        throw SeparationTooSmall("minimum pairwise distance " + std::to_string(d) +
                                 " violates the long-path requirement >= 4*rho = " +
                                 std::to_string(4.0 * rho));
}

}  // namespace dtsp
