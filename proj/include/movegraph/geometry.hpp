#pragma once

// Integer-pixel primitives. Screen coordinates: x grows right, y grows down.

#include <compare>
#include <cstdint>

namespace mg {

struct Delta {
    int dx = 0;
    int dy = 0;

    friend constexpr bool operator==(Delta, Delta) = default;
    constexpr Delta operator-() const { return {-dx, -dy}; }
};

struct Pt {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Pt, Pt) = default;
    friend constexpr Pt operator+(Pt p, Delta d) { return {p.x + d.dx, p.y + d.dy}; }
    friend constexpr Pt operator-(Pt p, Delta d) { return {p.x - d.dx, p.y - d.dy}; }
    friend constexpr Delta operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
    constexpr Pt& operator+=(Delta d) {
        x += d.dx;
        y += d.dy;
        return *this;
    }
};

/// Segment between two points; a == b is a valid (degenerate) segment.
struct Seg {
    Pt a;
    Pt b;

    friend constexpr bool operator==(const Seg&, const Seg&) = default;
};

/// Axis-aligned rectangle; right() and bottom() are exclusive-style edges as
/// in left + width.
struct Rect {
    int left = 0;
    int top = 0;
    int width = 0;
    int height = 0;

    constexpr int right() const { return left + width; }
    constexpr int bottom() const { return top + height; }
    constexpr Pt left_top() const { return {left, top}; }
    constexpr Pt middle() const { return {left + width / 2, top + height / 2}; }
    constexpr void offset(Delta d) {
        left += d.dx;
        top += d.dy;
    }

    friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

/// Squared Euclidean distance from p to the nearest point of s.
///
/// This is the quantity every strip hit test compares against
/// sensitivity^2. The batch kernels evaluate the same expression in the same
/// operation order so that scalar and vector paths agree bit for bit.
double dist2_point_segment(Pt p, Seg s);

/// Euclidean distance from p to the nearest point of s.
double dist_point_segment(Pt p, Seg s);

/// Angle of p around center in degrees, counterclockwise-positive on screen,
/// normalized to (-180, 180]. Throws std::domain_error when p == center.
double screen_angle_deg(Pt center, Pt p);

/// Rotates p around center by deg (counterclockwise on screen), rounding to
/// the nearest pixel.
Pt rotate_point(Pt center, Pt p, double deg);

/// Wraps an angle in degrees into (-180, 180].
double normalize_deg(double deg);

/// Chebyshev (max-norm) distance.
constexpr int chebyshev(Pt a, Pt b) {
    const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx > dy ? dx : dy;
}

constexpr std::int64_t dist2(Pt a, Pt b) {
    const std::int64_t dx = std::int64_t{a.x} - b.x;
    const std::int64_t dy = std::int64_t{a.y} - b.y;
    return dx * dx + dy * dy;
}

}  // namespace mg
