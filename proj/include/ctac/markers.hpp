#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "ctac/geometry.hpp"
#include "ctac/violation.hpp"

namespace ctac {

struct SensorConfig;

enum class Stiffness { rigid, flexible };

enum class LayoutKind { dot, double_layer, voronoi, coordinate };

struct Disk {
    Vec2 center;  // mm
    double radius = 0.0;  // mm
    bool operator==(const Disk&) const = default;
};

struct Polygon {
    std::vector<Vec2> vertices;  // mm, >= 3, convex, CCW
    bool operator==(const Polygon&) const = default;
};

// Gyroscope-style 3D pointer marker: origin plus three orthonormal pointer
// endpoints, each axis carrying its own color.
struct Frame {
    Vec3 origin;                      // mm
    std::array<Vec3, 3> tips;         // mm, pointer endpoints (x, y, z axes at rest)
    std::array<Rgb, 3> axis_colors{};
    bool operator==(const Frame&) const = default;
};

using MarkerGeometry = std::variant<Disk, Polygon, Frame>;

struct Marker {
    int id = 0;
    int layer = 0;  // 0 = deepest
    MarkerGeometry geometry;
    Rgb color;
    Stiffness stiffness = Stiffness::flexible;
    bool operator==(const Marker&) const = default;
};

struct MarkerLayout {
    LayoutKind kind = LayoutKind::dot;
    Rect bounds;  // sensing-area rectangle, mm
    double min_spacing_mm = 0.0;        // per-layer center spacing guarantee (0 = none)
    double layer_separation_mm = 0.0;   // physical z gap between adjacent layers
    std::vector<Marker> markers;
    bool operator==(const MarkerLayout&) const = default;

    int max_layer() const;
};

// Placement of dot markers inside the bounds: grid nodes are interior lattice
// points at pitch w/(cols+1), h/(rows+1) so a half-pitch offset grid still
// fits. offset_* in (-0.5, 0.5], in units of the pitch.
struct UniformGrid {
    int rows = 0;
    int cols = 0;
    double offset_x = 0.0;
    double offset_y = 0.0;
};

struct RandomScatter {
    int count = 0;
    double min_spacing_mm = 0.0;  // minimum pairwise center distance
    std::uint64_t seed = 0;
};

using Arrangement = std::variant<UniformGrid, RandomScatter>;

enum class CellShape { triangle, square, hexagon };

MarkerLayout gen_dot_layout(const Rect& bounds, const Arrangement& arrangement, double radius_mm,
                            Stiffness stiffness, const Rgb& color = {1, 1, 1}, int layer = 0);

MarkerLayout gen_double_layer(const Rect& bounds, const Arrangement& lower,
                              const Arrangement& upper, double separation_mm,
                              const std::array<Rgb, 2>& colors, Stiffness stiffness,
                              double radius_mm = 0.5);

MarkerLayout gen_voronoi(const Rect& bounds, CellShape cell, double pitch_mm,
                         const Rgb& edge_color);

MarkerLayout gen_coordinate_markers(const Rect& bounds, int rows, int cols, double pointer_len_mm,
                                    const std::array<Rgb, 3>& axis_colors);

std::vector<Violation> validate_layout(const MarkerLayout& layout, const SensorConfig& cfg);

// Applies a rigid transform to a frame marker about its origin: tips move to
// origin + t + R * (tip - origin). Used to synthesize 6D pose test cases.
Frame transform_frame(const Frame& frame, const Mat3& rotation, const Vec3& translation);

}  // namespace ctac
