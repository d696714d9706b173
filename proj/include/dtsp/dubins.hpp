#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dtsp/geom.hpp"

namespace dtsp {

/// A planar position together with a heading angle in [-pi, pi).
struct DirectedPoint {
    Vec2 position;
    double heading = 0.0;

    DirectedPoint() = default;
    DirectedPoint(Vec2 p, double theta) : position(p), heading(normalize_angle(theta)) {}
};

enum class CscType { LSL, LSR, RSL, RSR };

const char* to_string(CscType t);

/// A curvature-constrained curve of type CSC between two directed points:
/// an arc of radius rho, a straight segment, and a second arc. Arc angles
/// live in [0, 2*pi); a degenerate arc or segment has zero measure.
struct DubinsPath {
    CscType subtype = CscType::LSL;
    double arc1_angle = 0.0;       // radians, >= 0
    double straight_length = 0.0;  // >= 0
    double arc2_angle = 0.0;       // radians, >= 0
    Vec2 t1;                       // start of the straight segment
    Vec2 t2;                       // end of the straight segment
    Vec2 c1;                       // first arc centre
    Vec2 c2;                       // second arc centre
    double total_length = 0.0;
    double straight_heading = 0.0;  // direction of travel along t1 -> t2
    bool arc_limit_exceeded = false;  // some arc reached pi (outside the certified region)

    DirectedPoint start;
    double rho = 1.0;

    /// Unit vector along the straight segment, oriented with the curve.
    /// Well defined even when the segment degenerates to a point.
    Vec2 straight_dir() const { return direction(straight_heading); }
};

/// A curve of type CS from a directed point to an undirected point.
struct CSPath {
    enum class Type { LS, RS };
    Type subtype = Type::LS;
    double arc_angle = 0.0;
    double straight_length = 0.0;
    Vec2 t;  // tangent point where the arc hands over to the straight segment
    double total_length = 0.0;
    double straight_heading = 0.0;
    bool arc_limit_exceeded = false;  // the arc reached pi (target behind the heading)

    DirectedPoint start;
    double rho = 1.0;
};

/// Builds the CSC curve of the given subtype, if the tangent construction
/// exists. LSL/RSR always exist; LSR/RSL require the two arc centres to be
/// at least 2*rho apart.
std::optional<DubinsPath> csc_candidate(const DirectedPoint& from, const DirectedPoint& to,
                                        double rho, CscType subtype);

/// All four CSC candidates, indexed by subtype in declaration order.
std::array<std::optional<DubinsPath>, 4> csc_candidates(const DirectedPoint& from,
                                                        const DirectedPoint& to, double rho);

/// Shortest CSC curve between two directed points separated by at least
/// 4*rho. Ties between subtypes break toward the lexicographically smaller
/// tag (LSL < LSR < RSL < RSR).
///
/// Throws SeparationTooSmall if the endpoints are closer than 4*rho.
DubinsPath csc_path(const DirectedPoint& from, const DirectedPoint& to, double rho);

/// Shortest CS curve from a directed point to an undirected point at least
/// 4*rho away. Its arc is shorter than pi under that precondition.
CSPath cs_path(const DirectedPoint& from, Vec2 to_point, double rho);

/// k >= 2 points along the curve at equal arc-length spacing; the first and
/// last coincide with the curve endpoints.
std::vector<Vec2> sample_path(const DubinsPath& path, int k);
std::vector<Vec2> sample_path(const CSPath& path, int k);

/// Pose reached by following the curve for arc length s from its start.
DirectedPoint path_pose_at(const DubinsPath& path, double s);

}  // namespace dtsp
