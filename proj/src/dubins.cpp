#include "dtsp/dubins.hpp"

#include <cmath>
#include <string>

#include "dtsp/errors.hpp"

namespace dtsp {

namespace {

// Centre of the turning circle lying to the left (+1) or right (-1) of a pose.
Vec2 turn_centre(const DirectedPoint& p, double rho, int side) {
    const Vec2 n = perp(direction(p.heading));  // left normal
    return p.position + rho * static_cast<double>(side) * n;
}

bool is_left_first(CscType t) { return t == CscType::LSL || t == CscType::LSR; }
bool is_left_second(CscType t) { return t == CscType::LSL || t == CscType::RSL; }

}  // namespace

const char* to_string(CscType t) {
    switch (t) {
        case CscType::LSL: return "LSL";
        case CscType::LSR: return "LSR";
        case CscType::RSL: return "RSL";
        case CscType::RSR: return "RSR";
    }
    return "?";
}

std::optional<DubinsPath> csc_candidate(const DirectedPoint& from, const DirectedPoint& to,
                                        double rho, CscType subtype) {
    const int s1 = is_left_first(subtype) ? +1 : -1;
    const int s2 = is_left_second(subtype) ? +1 : -1;

    const Vec2 c1 = turn_centre(from, rho, s1);
    const Vec2 c2 = turn_centre(to, rho, s2);
    const Vec2 d = c2 - c1;
    const double centre_dist = norm(d);
    const double psi = angle_of(d);

    double chi;             // heading of the straight segment
    double straight_length;
    if (s1 == s2) {
        // Outer tangent: the segment is parallel to the line of centres.
        chi = psi;
        straight_length = centre_dist;
    } else {
        // Inner tangent: exists only when the circles do not overlap.
        if (centre_dist < 2.0 * rho) return std::nullopt;
        const double offset = std::asin(std::min(1.0, 2.0 * rho / centre_dist));
        chi = (s1 > 0) ? psi + offset : psi - offset;
        const double sq = centre_dist * centre_dist - 4.0 * rho * rho;
        straight_length = std::sqrt(std::max(0.0, sq));
    }

    DubinsPath path;
    path.subtype = subtype;
    path.start = from;
    path.rho = rho;
    path.straight_heading = chi;
    path.c1 = c1;
    path.c2 = c2;
    // The tangent point sits one radius from the centre, opposite the side
    // the centre occupies relative to the segment heading.
    path.t1 = c1 - rho * static_cast<double>(s1) * perp(direction(chi));
    path.t2 = c2 - rho * static_cast<double>(s2) * perp(direction(chi));
    path.arc1_angle = (s1 > 0) ? mod_two_pi(chi - from.heading) : mod_two_pi(from.heading - chi);
    path.arc2_angle = (s2 > 0) ? mod_two_pi(to.heading - chi) : mod_two_pi(chi - to.heading);
    path.straight_length = straight_length;
    path.total_length = rho * path.arc1_angle + straight_length + rho * path.arc2_angle;
    path.arc_limit_exceeded = path.arc1_angle >= kPi || path.arc2_angle >= kPi;
    return path;
}

std::array<std::optional<DubinsPath>, 4> csc_candidates(const DirectedPoint& from,
                                                        const DirectedPoint& to, double rho) {
    return {csc_candidate(from, to, rho, CscType::LSL),
            csc_candidate(from, to, rho, CscType::LSR),
            csc_candidate(from, to, rho, CscType::RSL),
            csc_candidate(from, to, rho, CscType::RSR)};
}

DubinsPath csc_path(const DirectedPoint& from, const DirectedPoint& to, double rho) {
    if (!(rho > 0.0)) throw SeparationTooSmall("turning radius must be positive");
    const double sep = distance(from.position, to.position);
    if (sep < 4.0 * rho) {
        throw SeparationTooSmall("endpoints separated by " + std::to_string(sep) +
                                 " < 4*rho = " + std::to_string(4.0 * rho));
    }

    const auto candidates = csc_candidates(from, to, rho);
    const DubinsPath* best = nullptr;
    for (const auto& c : candidates) {
        if (!c) continue;
        // Ties break toward the smaller subtype tag; candidates are already
        // enumerated in tag order, so strict comparison suffices.
        if (best == nullptr || c->total_length < best->total_length) best = &*c;
    }
    if (best == nullptr) throw NumericalDegeneracy("no CSC candidate admitted a tangent");
    return *best;
}

CSPath cs_path(const DirectedPoint& from, Vec2 to_point, double rho) {
    if (!(rho > 0.0)) throw SeparationTooSmall("turning radius must be positive");
    const double sep = distance(from.position, to_point);
    if (sep < 4.0 * rho) {
        throw SeparationTooSmall("endpoints separated by " + std::to_string(sep) +
                                 " < 4*rho = " + std::to_string(4.0 * rho));
    }

    std::optional<CSPath> best;
    for (const int side : {+1, -1}) {
        const Vec2 c = turn_centre(from, rho, side);
        const Vec2 e = to_point - c;
        const double d = norm(e);
        if (d < rho) continue;  // unreachable under the separation precondition
        // Right triangle centre-tangent-target: the tangent point sits at
        // angular offset acos(rho/d) from the centre-to-target direction,
        // on the side matching the turn orientation.
        const double eta = std::acos(std::min(1.0, rho / d));
        const double psi = angle_of(e);
        const double phi_t = (side > 0) ? psi - eta : psi + eta;
        const double phi_s = from.heading - static_cast<double>(side) * kPi / 2.0;

        CSPath cand;
        cand.subtype = (side > 0) ? CSPath::Type::LS : CSPath::Type::RS;
        cand.start = from;
        cand.rho = rho;
        cand.arc_angle = (side > 0) ? mod_two_pi(phi_t - phi_s) : mod_two_pi(phi_s - phi_t);
        cand.straight_length = std::sqrt(std::max(0.0, d * d - rho * rho));
        cand.t = c + rho * direction(phi_t);
        cand.straight_heading = phi_t + static_cast<double>(side) * kPi / 2.0;
        cand.total_length = rho * cand.arc_angle + cand.straight_length;
        cand.arc_limit_exceeded = cand.arc_angle >= kPi;
        if (!best || cand.total_length < best->total_length) best = cand;
    }
    if (!best) throw NumericalDegeneracy("no CS tangent construction succeeded");
    return *best;
}

DirectedPoint path_pose_at(const DubinsPath& path, double s) {
    const double rho = path.rho;
    const int s1 = is_left_first(path.subtype) ? +1 : -1;
    const int s2 = is_left_second(path.subtype) ? +1 : -1;

    const double l1 = rho * path.arc1_angle;
    const double l2 = l1 + path.straight_length;

    if (s <= l1) {
        const double swept = static_cast<double>(s1) * (s / rho);
        const double phi0 = path.start.heading - static_cast<double>(s1) * kPi / 2.0;
        const double phi = phi0 + swept;
        return {path.c1 + rho * direction(phi), path.start.heading + swept};
    }
    if (s <= l2) {
        return {path.t1 + (s - l1) * direction(path.straight_heading), path.straight_heading};
    }
    const double swept = static_cast<double>(s2) * ((s - l2) / rho);
    const double phi0 = path.straight_heading - static_cast<double>(s2) * kPi / 2.0;
    const double phi = phi0 + swept;
    return {path.c2 + rho * direction(phi), path.straight_heading + swept};
}

std::vector<Vec2> sample_path(const DubinsPath& path, int k) {
    if (k < 2) k = 2;
    std::vector<Vec2> pts;
    pts.reserve(static_cast<size_t>(k));
    const double total = path.total_length;
    for (int i = 0; i < k; ++i) {
        const double s = total * static_cast<double>(i) / static_cast<double>(k - 1);
        pts.push_back(path_pose_at(path, s).position);
    }
    return pts;
}

std::vector<Vec2> sample_path(const CSPath& path, int k) {
    if (k < 2) k = 2;
    std::vector<Vec2> pts;
    pts.reserve(static_cast<size_t>(k));
    const int side = path.subtype == CSPath::Type::LS ? +1 : -1;
    const double rho = path.rho;
    const double l1 = rho * path.arc_angle;
    const Vec2 c = turn_centre(path.start, rho, side);
    for (int i = 0; i < k; ++i) {
        const double s = path.total_length * static_cast<double>(i) / static_cast<double>(k - 1);
        if (s <= l1) {
            const double phi0 = path.start.heading - static_cast<double>(side) * kPi / 2.0;
            const double phi = phi0 + static_cast<double>(side) * (s / rho);
            pts.push_back(c + rho * direction(phi));
        } else {
            pts.push_back(path.t + (s - l1) * direction(path.straight_heading));
        }
    }
    return pts;
}

}  // namespace dtsp
