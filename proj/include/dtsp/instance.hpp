#pragma once

#include <optional>
#include <vector>

#include "dtsp/geom.hpp"

namespace dtsp {

/// A point set with its minimum turning radius. Valid tour instances have
/// n >= 3 points, every pair separated by at least 4*rho.
struct Instance {
    std::vector<Vec2> points;
    double rho = 1.0;
    std::optional<double> box;  // bounding square side, when known

    int size() const { return static_cast<int>(points.size()); }

    double min_pairwise_distance() const;

    /// Ratio of the minimum pairwise distance to rho.
    double scale() const { return min_pairwise_distance() / rho; }

    /// Throws SeparationTooSmall (naming the violated invariant) unless the
    /// instance is a valid long-path tour instance.
    void validate_for_tour() const;
};

}  // namespace dtsp
