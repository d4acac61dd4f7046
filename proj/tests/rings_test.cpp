#include "movegraph/rings.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "movegraph/mover.hpp"

namespace mg {
namespace {

constexpr MouseButton L = MouseButton::Left;
constexpr MouseButton R = MouseButton::Right;

RingSet one_ring() { return RingSet({0, 0}, {{50, 70, 0, {1, 1, 1, 1}}}); }

TEST(RingSet, OneRingFourSectors) {
    const RingSet rs = one_ring();
    const Contour c = rs.define_contour();
    EXPECT_EQ(c.nodes().size(), 8u);
    EXPECT_EQ(c.connections().size(), 4u);
    EXPECT_EQ(c.node(0).anchor, (Pt{50, 0}));
    EXPECT_EQ(c.node(1).anchor, (Pt{70, 0}));
    EXPECT_EQ(c.node(2).anchor, (Pt{0, -50}));  // 90 degrees is up on screen
    EXPECT_EQ(rs.boundary_angles(0), (std::vector<double>{0, 90, 180, 270}));
}

TEST(RingSet, TwoRingsEvenInnerOddOuter) {
    const RingSet rs({100, 100}, {{30, 50, 0, {1, 1, 1, 1}}, {60, 80, 10, {1, 2, 3}}});
    const Contour c = rs.define_contour();
    ASSERT_EQ(c.nodes().size(), 14u);
    ASSERT_EQ(c.connections().size(), 7u);
    for (const ContourNode& n : c.nodes()) {
        const auto ref = rs.locate(n.id);
        ASSERT_TRUE(ref);
        const Ring& ring = rs.rings()[ref->ring];
        const double r = std::sqrt(static_cast<double>(dist2(n.anchor, rs.center())));
        EXPECT_NEAR(r, ref->outer ? ring.r_out : ring.r_in, 1.0);
        EXPECT_EQ(ref->outer, n.id % 2 == 1);
    }
    for (std::size_t k = 0; k < 7; ++k) {
        EXPECT_EQ(c.connections()[k].i, static_cast<int>(2 * k));
        EXPECT_EQ(c.connections()[k].j, static_cast<int>(2 * k + 1));
    }
    EXPECT_EQ(rs.locate(8)->ring, 1u);
    EXPECT_FALSE(rs.locate(14));
}

TEST(RingSet, RadialDragRespectsRingWidth) {
    RingSet rs = one_ring();
    EXPECT_FALSE(rs.move_node(0, {15, 0}, {}, L));
    EXPECT_EQ(rs, one_ring());
    EXPECT_TRUE(rs.move_node(0, {12, 0}, {}, L));
    EXPECT_EQ(rs.rings()[0].r_in, 62);
}

TEST(RingSet, RadialDragUsesProjection) {
    RingSet rs = one_ring();
    // Node 3 sits on the outer circle at 90 degrees: only -dy counts as outward.
    EXPECT_TRUE(rs.move_node(3, {40, -10}, {}, L));
    EXPECT_EQ(rs.rings()[0].r_out, 80);
}

TEST(RingSet, InnerRadiusAndGapMinima) {
    RingSet rs({0, 0}, {{25, 40, 0, {1, 1}}, {50, 60, 0, {1, 1}}});
    EXPECT_FALSE(rs.move_node(0, {-6, 0}, {}, L));   // below 20
    EXPECT_TRUE(rs.move_node(0, {-5, 0}, {}, L));
    EXPECT_FALSE(rs.move_node(1, {7, 0}, {}, L));    // gap 3 < 4
    EXPECT_TRUE(rs.move_node(1, {6, 0}, {}, L));
    EXPECT_TRUE(rs.move_node(5, {500, 0}, {}, L));   // outermost unbounded
    EXPECT_FALSE(rs.violation());
}

TEST(RingSet, MoveShiftsCenterOnly) {
    RingSet rs({300, 300}, {{50, 70, 0, {1, 2}}});
    rs.move({-10, 4});
    EXPECT_EQ(rs.center(), (Pt{290, 304}));
    rs.move({10, -4});
    EXPECT_EQ(rs, RingSet({300, 300}, {{50, 70, 0, {1, 2}}}));
}

TEST(RingSet, RotationFollowsPointer) {
    RingSet rs = one_ring();
    rs.on_catch(1, {70, 0}, R);
    rs.move_node(1, {}, {0, -70}, R);
    EXPECT_EQ(rs.rings()[0].start_deg, 90);
    rs.on_release();
}

TEST(RingSet, RotationBelowThresholdIgnored) {
    RingSet rs = one_ring();
    rs.on_catch(1, {70, 0}, R);
    // atan(1/200) is well under one degree.
    rs.move_node(1, {}, {200, -1}, R);
    EXPECT_EQ(rs.rings()[0].start_deg, 0);
}

TEST(RingSet, RotationAtCenterIsNoOp) {
    RingSet rs = one_ring();
    rs.on_catch(1, {70, 0}, R);
    rs.move_node(1, {}, {0, 0}, R);
    EXPECT_EQ(rs, one_ring());
}

TEST(RingSet, StartAngleWrapsIntoRange) {
    RingSet rs({0, 0}, {{50, 70, 350, {1, 1}}});
    rs.on_catch(1, {69, -12}, R);
    rs.move_node(1, {}, {0, -70}, R);
    EXPECT_EQ(rs.rings()[0].start_deg, 90);
    rs.move_node(1, {}, {0, 70}, R);
    EXPECT_EQ(rs.rings()[0].start_deg, 270);
    EXPECT_FALSE(rs.violation());
}

// A slow sweep in one-degree steps must not lose the sub-threshold remainder.
TEST(RingSet, SlowSweepThroughMover) {
    Mover m;
    auto rs = std::make_shared<RingSet>(one_ring());
    m.add(rs);
    ASSERT_TRUE(m.catch_at({70, 0}, R));
    for (int deg = 1; deg <= 90; ++deg) {
        m.moving(rotate_point({0, 0}, {200, 0}, deg));
    }
    m.release();
    EXPECT_NEAR(rs->rings()[0].start_deg, 90, 1);
    EXPECT_EQ(rs->rings()[0].values, one_ring().rings()[0].values);
    EXPECT_EQ(rs->rings()[0].r_in, 50);
    EXPECT_EQ(rs->rings()[0].r_out, 70);
    EXPECT_EQ(m.contour(0), rs->define_contour());
}

TEST(RingSet, FuzzKeepsInvariantsAndRotationKeepsRadii) {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> step(-30, 30);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int set = 0; set < 50; ++set) {
        RingSet rs({0, 0}, {{25, 45, 0, {1, 2, 3}}, {55, 80, 30, {4, 1}}, {90, 100, 200, {1, 1, 1, 1}}});
        std::uniform_int_distribution<int> id(0, rs.node_count() - 1);
        for (int k = 0; k < 200; ++k) {
            const int node = id(rng);
            if (coin(rng)) {
                const auto before = rs.rings();
                rs.on_catch(node, {}, R);
                rs.move_node(node, {}, {step(rng) * 5, step(rng) * 5}, R);
                rs.on_release();
                for (std::size_t r = 0; r < before.size(); ++r) {
                    ASSERT_EQ(rs.rings()[r].r_in, before[r].r_in);
                    ASSERT_EQ(rs.rings()[r].r_out, before[r].r_out);
                    ASSERT_EQ(rs.rings()[r].values, before[r].values);
                }
            } else {
                rs.move_node(node, {step(rng), step(rng)}, {}, L);
            }
            ASSERT_FALSE(rs.violation()) << *rs.violation();
        }
    }
}

}  // namespace
}  // namespace mg
