#pragma once

#include <cmath>

namespace mollowg2 {

/// Minimal 3-vector; lengths in units of the laser wavelength.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr double norm_squared() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_squared()); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

} // namespace mollowg2
