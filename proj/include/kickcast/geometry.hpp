#ifndef KICKCAST_GEOMETRY_HPP
#define KICKCAST_GEOMETRY_HPP

#include <cmath>

namespace kickcast {

// Field geometry (server defaults). All internal coordinates are normalized so
// the kicker's team attacks toward +x.
inline constexpr double kFieldHalfLength = 52.5;
inline constexpr double kFieldHalfWidth = 34.0;
inline constexpr double kFieldMargin = 5.0;  // players may slightly exit the pitch
inline constexpr double kGoalHalfWidth = 7.01;
inline constexpr double kBallSpeedMax = 3.0;  // meters per cycle

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double length() const { return std::hypot(x, y); }
    double dist(const Vec2& o) const { return std::hypot(x - o.x, y - o.y); }
};

inline Vec2 goal_center() { return {kFieldHalfLength, 0.0}; }
inline Vec2 field_center() { return {0.0, 0.0}; }

inline double deg_to_rad(double d) { return d * M_PI / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / M_PI; }

/// Wraps an angle in degrees into (-180, 180].
inline double normalize_deg(double a) {
    a = std::fmod(a, 360.0);
    if (a > 180.0) a -= 360.0;
    if (a <= -180.0) a += 360.0;
    return a;
}

/// Direction of a vector in degrees, (-180, 180]. The zero vector maps to 0.
inline double angle_deg(const Vec2& v) {
    if (v.x == 0.0 && v.y == 0.0) return 0.0;
    return normalize_deg(rad_to_deg(std::atan2(v.y, v.x)));
}

/// Absolute angular difference in [0, 180].
inline double angle_diff_deg(double a, double b) {
    return std::abs(normalize_deg(a - b));
}

/// Unit vector for a direction given in degrees.
inline Vec2 unit_deg(double deg) {
    double r = deg_to_rad(deg);
    return {std::cos(r), std::sin(r)};
}

inline bool inside_pitch(const Vec2& p) {
    return std::abs(p.x) <= kFieldHalfLength && std::abs(p.y) <= kFieldHalfWidth;
}

}  // namespace kickcast

#endif  // KICKCAST_GEOMETRY_HPP
