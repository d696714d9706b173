#pragma once

#include <optional>
#include <vector>

#include "dtsp/dubins.hpp"
#include "dtsp/instance.hpp"

namespace dtsp {

/// A visiting order (cyclic permutation of point indices) plus one heading
/// angle per point, indexed by point.
struct TourConfig {
    std::vector<int> sequence;
    std::vector<double> angles;
};

/// A tour evaluated edge by edge. edges[k] connects sequence position k to
/// k+1 (cyclically); torques are indexed by point, matching angles.
struct TourEvaluation {
    double length = 0.0;
    std::vector<DubinsPath> edges;
    std::vector<double> torques;
    double max_arc = 0.0;
    std::optional<double> gap_bound;  // present iff max_arc < pi
};

/// Checks that config.sequence is a permutation of 0..n-1 and angles has one
/// finite entry per point; throws SeparationTooSmall naming the problem.
void validate_config(const Instance& instance, const TourConfig& config);

/// Evaluates the tour: shortest CSC edge between consecutive directed points,
/// the net torque on each point, and the optimality-gap certificate. Edge
/// construction runs in parallel for large instances.
TourEvaluation evaluate(const Instance& instance, const TourConfig& config);

/// Serial reference for evaluate(); bit-identical results, no threading.
TourEvaluation evaluate_reference(const Instance& instance, const TourConfig& config);

/// Gradient of tour length with respect to the heading angles: the negated
/// torque vector, indexed by point.
std::vector<double> gradient(const Instance& instance, const TourConfig& config);

/// Heading initialization from the zero-radius limit: each point takes the
/// direction of the sum of its incoming and outgoing unit edge vectors. When
/// that sum vanishes (exact reversal) the heading falls back to the
/// perpendicular of the outgoing direction.
std::vector<double> seed_angles(const Instance& instance, const std::vector<int>& sequence);

/// Certified upper bound 2*sqrt(n)*pi*|grad| on the gap to the local optimum,
/// valid while every arc is strictly shorter than pi.
double gap_bound_value(int n, double grad_norm);

/// Gradient of tour length with respect to the point positions at fixed
/// headings, indexed by point.
std::vector<Vec2> position_gradient(const Instance& instance, const TourConfig& config);

/// Effective 1-D derivative for a point sliding along a constraint direction.
/// Throws NotUnit if the direction is not unit length (tolerance 1e-9).
double project_velocity(Vec2 grad_component, Vec2 constraint_direction);

struct DescentSettings {
    enum class Policy { LineSearch, FixedAlpha };
    Policy policy = Policy::LineSearch;
    /// Step per unit of rho-normalized torque. The update is
    /// theta += alpha0 * tau / rho, which is invariant under rescaling.
    double alpha0 = 0.1;
    /// Gradient-norm tolerance. When unset, iterate until the gap bound
    /// certifies a relative error of 1e-3: 2*sqrt(n)*pi*|grad| <= 1e-3 * L.
    std::optional<double> epsilon;
    int max_iters = 10000;
    /// Starting angles; for flip descents and warm restarts. Defaults to the seed.
    std::optional<std::vector<double>> initial_angles;
};

struct DescentTracePoint {
    double length = 0.0;
    double grad_norm = 0.0;
    std::optional<double> gap_bound;
};

struct DescentResult {
    TourConfig config;
    TourEvaluation eval;
    std::vector<DescentTracePoint> trace;  // trace[0] is the starting configuration
    int iterations = 0;
    bool converged = false;
    /// Line search could no longer certify a decrease at the smallest step.
    bool stalled = false;
};

/// Torque-following descent over the heading angles of a fixed sequence.
/// Angles are kept unwrapped internally and normalized in the returned config.
DescentResult gradient_descent(const Instance& instance, const std::vector<int>& sequence,
                               const DescentSettings& settings = {});

}  // namespace dtsp
