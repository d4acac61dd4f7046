#include "movegraph/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace mg {
namespace {

TEST(DistPointSegment, Examples) {
    EXPECT_DOUBLE_EQ(dist_point_segment({5, 3}, {{0, 0}, {10, 0}}), 3.0);
    EXPECT_DOUBLE_EQ(dist_point_segment({-4, 3}, {{0, 0}, {10, 0}}), 5.0);
    EXPECT_DOUBLE_EQ(dist_point_segment({7, 7}, {{7, 7}, {7, 7}}), 0.0);
}

TEST(DistPointSegment, DegenerateUsesEndpoint) {
    EXPECT_DOUBLE_EQ(dist_point_segment({10, 4}, {{7, 0}, {7, 0}}), 5.0);
}

TEST(DistPointSegment, SymmetricAndNonNegative) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-500, 500);
    for (int k = 0; k < 20000; ++k) {
        const Pt p{c(rng), c(rng)};
        const Seg s{{c(rng), c(rng)}, {c(rng), c(rng)}};
        const double d = dist_point_segment(p, s);
        ASSERT_GE(d, 0.0);
        ASSERT_EQ(d, dist_point_segment(p, {s.b, s.a}));
    }
}

// Independent oracle: minimum over a dense parameter sweep of the segment.
TEST(DistPointSegment, MatchesParametricSweep) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-60, 60);
    for (int k = 0; k < 300; ++k) {
        const Pt p{c(rng), c(rng)};
        const Seg s{{c(rng), c(rng)}, {c(rng), c(rng)}};
        double best = 1e300;
        constexpr int kSteps = 20000;
        for (int i = 0; i <= kSteps; ++i) {
            const double t = static_cast<double>(i) / kSteps;
            const double x = s.a.x + t * (s.b.x - s.a.x) - p.x;
            const double y = s.a.y + t * (s.b.y - s.a.y) - p.y;
            best = std::min(best, std::hypot(x, y));
        }
        ASSERT_NEAR(dist_point_segment(p, s), best, 0.02);
    }
}

TEST(DistPointSegment, ZeroOnlyOnSegment) {
    const Seg s{{0, 0}, {10, 5}};
    EXPECT_EQ(dist_point_segment({4, 2}, s), 0.0);
    EXPECT_GT(dist_point_segment({4, 3}, s), 0.0);
}

TEST(ScreenAngle, Examples) {
    EXPECT_DOUBLE_EQ(screen_angle_deg({0, 0}, {10, 0}), 0.0);
    EXPECT_DOUBLE_EQ(screen_angle_deg({0, 0}, {0, -10}), 90.0);
    EXPECT_DOUBLE_EQ(screen_angle_deg({0, 0}, {-10, 0}), 180.0);
    EXPECT_DOUBLE_EQ(screen_angle_deg({0, 0}, {0, 10}), -90.0);
}

TEST(ScreenAngle, CenterIsAnError) {
    EXPECT_THROW(screen_angle_deg({3, 3}, {3, 3}), std::domain_error);
}

TEST(ScreenAngle, RangeIsHalfOpen) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-300, 300);
    for (int k = 0; k < 5000; ++k) {
        const Pt p{c(rng), c(rng)};
        if (p == Pt{0, 0}) continue;
        const double a = screen_angle_deg({0, 0}, p);
        ASSERT_GT(a, -180.0);
        ASSERT_LE(a, 180.0);
    }
}

TEST(RotatePoint, Examples) {
    EXPECT_EQ(rotate_point({0, 0}, {10, 0}, 90), (Pt{0, -10}));
    EXPECT_EQ(rotate_point({5, 5}, {5, 5}, 33), (Pt{5, 5}));
    EXPECT_EQ(rotate_point({0, 0}, {3, 4}, 360), (Pt{3, 4}));
}

TEST(RotatePoint, InverseWithinOnePixel) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-400, 400);
    std::uniform_real_distribution<double> a(-720.0, 720.0);
    for (int k = 0; k < 20000; ++k) {
        const Pt center{c(rng), c(rng)};
        const Pt p{c(rng), c(rng)};
        const double deg = a(rng);
        const Pt back = rotate_point(center, rotate_point(center, p, deg), -deg);
        ASSERT_LE(chebyshev(back, p), 1) << "deg=" << deg;
    }
}

// Rounding the result to the pixel grid moves it by at most sqrt(2)/2, so the
// angular error at radius r is bounded by asin(sqrt(2)/2 / r). That bound
// drops below one degree only from r = 41 outward.
TEST(RotatePoint, AngleErrorBoundedByRounding) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-300, 300);
    std::uniform_real_distribution<double> a(-360.0, 360.0);
    int checked = 0;
    while (checked < 20000) {
        const Pt center{c(rng), c(rng)};
        const Pt p{c(rng), c(rng)};
        if (dist2(center, p) < 100) continue;
        const double r = std::sqrt(static_cast<double>(dist2(center, p)));
        const double deg = a(rng);
        const double turned =
            screen_angle_deg(center, rotate_point(center, p, deg)) - screen_angle_deg(center, p);
        const double err = std::abs(normalize_deg(turned - deg));
        const double bound = std::asin(std::sqrt(0.5) / r) * 180.0 / std::acos(-1.0);
        ASSERT_LE(err, bound + 1e-9) << "r=" << r;
        if (r >= 41.0) ASSERT_LE(err, 1.0);
        ++checked;
    }
}

TEST(RotatePoint, OneDegreeNotReachableAtRadiusTen) {
    // Rotating (10, 0) by 45 degrees lands on (7, -7) after rounding: exactly
    // 45 degrees. Rotating by 20 lands on (9, -3), which reads as 18.43.
    const Pt q = rotate_point({0, 0}, {10, 0}, 20);
    EXPECT_EQ(q, (Pt{9, -3}));
    EXPECT_GT(std::abs(screen_angle_deg({0, 0}, q) - 20.0), 1.0);
}

}  // namespace
}  // namespace mg
