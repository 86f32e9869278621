#include "ctac/geometry.hpp"

#include <algorithm>

namespace ctac {

Mat3 Mat3::rot_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {1, 0, 0, 0, c, -s, 0, s, c};
    return r;
}

Mat3 Mat3::rot_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {c, 0, s, 0, 1, 0, -s, 0, c};
    return r;
}

Mat3 Mat3::rot_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
    return r;
}

Mat3 Mat3::from_rotvec(const Vec3& w) {
    const double angle = w.norm();
    if (angle < 1e-300) return identity();
    const Vec3 k = w * (1.0 / angle);
    const double c = std::cos(angle), s = std::sin(angle), v = 1.0 - c;
    Mat3 r;
    r.m = {k.x * k.x * v + c,       k.x * k.y * v - k.z * s, k.x * k.z * v + k.y * s,
           k.y * k.x * v + k.z * s, k.y * k.y * v + c,       k.y * k.z * v - k.x * s,
           k.z * k.x * v - k.y * s, k.z * k.y * v + k.x * s, k.z * k.z * v + c};
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 3; ++k) sum += (*this)(i, k) * o(k, j);
            r(i, j) = sum;
        }
    return r;
}

Mat3 Mat3::transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
}

double polygon_signed_area(const std::vector<Vec2>& v) {
    double acc = 0.0;
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * acc;
}

bool polygon_is_convex(const std::vector<Vec2>& v) {
    const size_t n = v.size();
    if (n < 3) return false;
    int sign = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2 e1 = v[(i + 1) % n] - v[i];
        const Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
        const double cross = e1.cross(e2);
        if (std::abs(cross) < 1e-12) continue;  // collinear edge pair
        const int s = cross > 0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            return false;
    }
    return true;
}

bool point_in_convex_polygon(const Vec2& p, const std::vector<Vec2>& v) {
    const size_t n = v.size();
    if (n < 3) return false;
    const double orient = polygon_signed_area(v) >= 0 ? 1.0 : -1.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2 e = v[(i + 1) % n] - v[i];
        if (orient * e.cross(p - v[i]) < 0) return false;
    }
    return true;
}

std::vector<Vec2> clip_polygon_to_rect(const std::vector<Vec2>& vertices, const Rect& rect) {
    // inside predicates and line parameters for the four rect edges
    enum Edge { Left, Right, Bottom, Top };
    std::vector<Vec2> poly = vertices;
    for (int edge = Left; edge <= Top; ++edge) {
        if (poly.empty()) break;
        std::vector<Vec2> out;
        out.reserve(poly.size() + 4);
        auto inside = [&](const Vec2& p) {
            switch (edge) {
                case Left: return p.x >= rect.min_x;
                case Right: return p.x <= rect.max_x;
                case Bottom: return p.y >= rect.min_y;
                default: return p.y <= rect.max_y;
            }
        };
        auto intersect = [&](const Vec2& a, const Vec2& b) {
            double t;
            switch (edge) {
                case Left: t = (rect.min_x - a.x) / (b.x - a.x); break;
                case Right: t = (rect.max_x - a.x) / (b.x - a.x); break;
                case Bottom: t = (rect.min_y - a.y) / (b.y - a.y); break;
                default: t = (rect.max_y - a.y) / (b.y - a.y); break;
            }
            Vec2 p = a + (b - a) * t;
            // snap the clipped coordinate exactly onto the rect edge
            switch (edge) {
                case Left: p.x = rect.min_x; break;
                case Right: p.x = rect.max_x; break;
                case Bottom: p.y = rect.min_y; break;
                default: p.y = rect.max_y; break;
            }
            return p;
        };
        const size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2& cur = poly[i];
            const Vec2& nxt = poly[(i + 1) % n];
            const bool cin = inside(cur), nin = inside(nxt);
            if (cin) out.push_back(cur);
            if (cin != nin) out.push_back(intersect(cur, nxt));
        }
        poly = std::move(out);
    }
    // drop duplicate consecutive vertices introduced by clipping corners
    std::vector<Vec2> dedup;
    for (const Vec2& p : poly) {
        if (dedup.empty() || std::abs(dedup.back().x - p.x) > 1e-12 ||
            std::abs(dedup.back().y - p.y) > 1e-12)
            dedup.push_back(p);
    }
    while (dedup.size() > 1 && std::abs(dedup.front().x - dedup.back().x) < 1e-12 &&
           std::abs(dedup.front().y - dedup.back().y) < 1e-12)
        dedup.pop_back();
    if (dedup.size() < 3) dedup.clear();
    return dedup;
}

}  // namespace ctac
