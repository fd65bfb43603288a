#pragma once

#include <cmath>
#include <numbers>

namespace navlm {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Headings are measured clockwise from +y ("north"), the Matterport convention.
// wrap_two_pi maps to [0, 2*pi) for absolute headings; wrap_pi maps to (-pi, pi]
// for relative ones.
inline double wrap_two_pi(double angle) {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}

inline double wrap_pi(double angle) {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(angle + std::numbers::pi, two_pi);
    if (a <= 0.0) a += two_pi;
    return a - std::numbers::pi;
}

// Compass bearing of the horizontal direction from `from` to `to`.
inline double bearing(const Vec3& from, const Vec3& to) {
    return std::atan2(to.x - from.x, to.y - from.y);
}

} // namespace navlm
