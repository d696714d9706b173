#pragma once

#include <cmath>
#include <numbers>

namespace dtsp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-D cross product of two in-plane vectors.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

inline Vec2 unit(Vec2 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

inline Vec2 direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

/// Rotates v by 90 degrees counterclockwise.
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Normalizes an angle to [-pi, pi).
inline double normalize_angle(double a) {
    double r = std::remainder(a, kTwoPi);
    if (r >= kPi) r -= kTwoPi;  // remainder returns (-pi, pi]; fold +pi to -pi
    return r;
}

/// Maps an angle to [0, 2*pi), snapping values within 1e-12 of a full turn
/// (or of zero) to exactly 0 so that aligned tangent constructions yield
/// zero-length arcs instead of spurious full circles.
inline double mod_two_pi(double a) {
    double r = a - kTwoPi * std::floor(a / kTwoPi);
    if (r >= kTwoPi) r -= kTwoPi;
    if (r < 1e-12 || kTwoPi - r < 1e-12) r = 0.0;
    return r;
}

/// Distance from point p to the closed segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return distance(p, a + t * ab);
}

}  // namespace dtsp
