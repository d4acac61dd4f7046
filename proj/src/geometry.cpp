#include "movegraph/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mg {

double dist2_point_segment(Pt p, Seg s) {
    const double ax = static_cast<double>(s.b.x) - s.a.x;
    const double ay = static_cast<double>(s.b.y) - s.a.y;
    const double px = static_cast<double>(p.x) - s.a.x;
    const double py = static_cast<double>(p.y) - s.a.y;
    const double len2 = ax * ax + ay * ay;
    const double dot = px * ax + py * ay;
    if (len2 == 0.0 || dot <= 0.0) {
        return px * px + py * py;
    }
    if (dot >= len2) {
        const double qx = static_cast<double>(p.x) - s.b.x;
        const double qy = static_cast<double>(p.y) - s.b.y;
        return qx * qx + qy * qy;
    }
    const double cross = px * ay - py * ax;
    return (cross * cross) / len2;
}

double dist_point_segment(Pt p, Seg s) {
    return std::sqrt(dist2_point_segment(p, s));
}

double normalize_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r <= -180.0) {
        r += 360.0;
    } else if (r > 180.0) {
        r -= 360.0;
    }
    return r;
}

double screen_angle_deg(Pt center, Pt p) {
    if (p == center) {
        throw std::domain_error("undefined angle at center");
    }
    const double rad = -std::atan2(static_cast<double>(p.y) - center.y,
                                   static_cast<double>(p.x) - center.x);
    // atan2 yields [-pi, pi]; negation maps +pi (negative x axis) to -180.
    return normalize_deg(rad * 180.0 / std::numbers::pi);
}

Pt rotate_point(Pt center, Pt p, double deg) {
    const double rad = deg * std::numbers::pi / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const double rx = static_cast<double>(p.x) - center.x;
    const double ry = static_cast<double>(p.y) - center.y;
    // Screen y points down, so a counterclockwise turn uses the transposed sine.
    const double nx = rx * c + ry * s;
    const double ny = -rx * s + ry * c;
    return {center.x + static_cast<int>(std::lround(nx)),
            center.y + static_cast<int>(std::lround(ny))};
}

}  // namespace mg
