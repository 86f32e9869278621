#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace ctac {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    // z-component of the 3D cross product of two in-plane vectors.
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    bool operator==(const Vec3&) const = default;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    Vec2 xy() const { return {x, y}; }
};

// Axis-aligned rectangle, min corner inclusive.
struct Rect {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    bool operator==(const Rect&) const = default;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double area() const { return width() * height(); }
    bool contains(const Vec2& p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
};

struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    bool operator==(const Rgb&) const = default;

    double luma() const { return 0.299 * r + 0.587 * g + 0.114 * b; }
    double dist(const Rgb& o) const {
        const double dr = r - o.r, dg = g - o.g, db = b - o.b;
        return std::sqrt(dr * dr + dg * dg + db * db);
    }
};

// 3x3 rotation matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }
    static Mat3 rot_x(double a);
    static Mat3 rot_y(double a);
    static Mat3 rot_z(double a);
    // Rodrigues rotation about a (not necessarily unit) axis by |axis| radians.
    static Mat3 from_rotvec(const Vec3& w);

    double operator()(int r, int c) const { return m[3 * r + c]; }
    double& operator()(int r, int c) { return m[3 * r + c]; }
    Mat3 operator*(const Mat3& o) const;
    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 transposed() const;
    Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
    Vec3 col(int c) const { return {m[c], m[c + 3], m[c + 6]}; }
};

// Shoelace area, positive for counter-clockwise vertex order.
double polygon_signed_area(const std::vector<Vec2>& vertices);

bool polygon_is_convex(const std::vector<Vec2>& vertices);

bool point_in_convex_polygon(const Vec2& p, const std::vector<Vec2>& vertices);

// Clips a convex polygon to an axis-aligned rectangle (Sutherland-Hodgman).
std::vector<Vec2> clip_polygon_to_rect(const std::vector<Vec2>& vertices, const Rect& rect);

}  // namespace ctac
