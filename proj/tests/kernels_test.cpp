#include "movegraph/kernels.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace mg::kernels {
namespace {

struct Cloud {
    std::vector<int> xs;
    std::vector<int> ys;
};

Cloud random_cloud(std::mt19937& rng, std::size_t n, int span) {
    std::uniform_int_distribution<int> c(-span, span);
    Cloud cloud;
    for (std::size_t k = 0; k < n; ++k) {
        cloud.xs.push_back(c(rng));
        cloud.ys.push_back(c(rng));
    }
    return cloud;
}

TEST(ScalarKernels, StripMatchesPointwiseDistance) {
    std::mt19937 rng(1);
    const Cloud cloud = random_cloud(rng, 4001, 200);
    const Seg s{{-50, 10}, {70, -30}};
    std::vector<unsigned char> out(cloud.xs.size(), 0);
    scalar().strip(s, 17, cloud.xs, cloud.ys, out);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const bool inside = dist2_point_segment({cloud.xs[k], cloud.ys[k]}, s) <= 17.0 * 17.0;
        ASSERT_EQ(out[k], inside ? 1 : 0);
    }
}

TEST(ScalarKernels, OnlySetsNeverClears) {
    const std::vector<int> xs{0, 100};
    const std::vector<int> ys{0, 100};
    std::vector<unsigned char> out{1, 1};
    scalar().square({0, 0}, 3, xs, ys, out);
    EXPECT_EQ(out[1], 1);
}

TEST(ScalarKernels, SquareAndCircleBoundariesInclusive) {
    const std::vector<int> xs{3, 4, 3};
    const std::vector<int> ys{3, 0, 4};
    std::vector<unsigned char> sq(3, 0), ci(3, 0);
    scalar().square({0, 0}, 3, xs, ys, sq);
    scalar().circle({0, 0}, 5, xs, ys, ci);
    EXPECT_EQ(sq, (std::vector<unsigned char>{1, 0, 0}));
    EXPECT_EQ(ci, (std::vector<unsigned char>{1, 1, 1}));
}

class VectorKernels : public ::testing::Test {
protected:
    void SetUp() override {
        vec_ = avx2();
        if (vec_ == nullptr) {
            GTEST_SKIP() << "no vector kernels on this machine";
        }
    }
    const Table* vec_ = nullptr;
};

// Odd sizes exercise the scalar tail of each vector loop.
TEST_F(VectorKernels, StripEquivalentToScalar) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> c(-300, 300);
    std::uniform_int_distribution<int> sens(0, 80);
    for (int round = 0; round < 200; ++round) {
        const Cloud cloud = random_cloud(rng, 1000 + round, 400);
        Seg s{{c(rng), c(rng)}, {c(rng), c(rng)}};
        if (round % 10 == 0) s.b = s.a;
        const int sensitivity = sens(rng);
        std::vector<unsigned char> a(cloud.xs.size(), 0), b(cloud.xs.size(), 0);
        scalar().strip(s, sensitivity, cloud.xs, cloud.ys, a);
        vec_->strip(s, sensitivity, cloud.xs, cloud.ys, b);
        ASSERT_EQ(a, b) << "round " << round;
    }
}

TEST_F(VectorKernels, StripEquivalentNearBoundary) {
    // Dense grid around a short segment: many points sit exactly on the strip edge.
    Cloud cloud;
    for (int y = -60; y <= 60; ++y) {
        for (int x = -60; x <= 61; ++x) {
            cloud.xs.push_back(x);
            cloud.ys.push_back(y);
        }
    }
    for (const Seg& s : {Seg{{-1, 0}, {1, 0}}, Seg{{-20, -20}, {25, 25}}, Seg{{3, 4}, {3, 4}}}) {
        for (int sensitivity : {0, 1, 5, 24, 49}) {
            std::vector<unsigned char> a(cloud.xs.size(), 0), b(cloud.xs.size(), 0);
            scalar().strip(s, sensitivity, cloud.xs, cloud.ys, a);
            vec_->strip(s, sensitivity, cloud.xs, cloud.ys, b);
            ASSERT_EQ(a, b);
        }
    }
}

TEST_F(VectorKernels, SquareEquivalentToScalar) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-100, 100);
    std::uniform_int_distribution<int> half(0, 60);
    for (int round = 0; round < 200; ++round) {
        const Cloud cloud = random_cloud(rng, 777 + round, 150);
        const Pt center{c(rng), c(rng)};
        const int h = half(rng);
        std::vector<unsigned char> a(cloud.xs.size(), 0), b(cloud.xs.size(), 0);
        scalar().square(center, h, cloud.xs, cloud.ys, a);
        vec_->square(center, h, cloud.xs, cloud.ys, b);
        ASSERT_EQ(a, b);
    }
}

TEST_F(VectorKernels, CircleEquivalentToScalar) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> c(-100, 100);
    std::uniform_int_distribution<int> rad(1, 90);
    for (int round = 0; round < 200; ++round) {
        const Cloud cloud = random_cloud(rng, 513 + round, 150);
        const Pt center{c(rng), c(rng)};
        const int r = rad(rng);
        std::vector<unsigned char> a(cloud.xs.size(), 0), b(cloud.xs.size(), 0);
        scalar().circle(center, r, cloud.xs, cloud.ys, a);
        vec_->circle(center, r, cloud.xs, cloud.ys, b);
        ASSERT_EQ(a, b);
    }
}

TEST_F(VectorKernels, LargeCoordinatesWithinLimit) {
    std::mt19937 rng(5);
    const Cloud cloud = random_cloud(rng, 4099, kKernelCoordLimit / 2);
    const Seg s{{-kKernelCoordLimit / 3, 12345}, {kKernelCoordLimit / 4, -999}};
    std::vector<unsigned char> a(cloud.xs.size(), 0), b(cloud.xs.size(), 0);
    scalar().strip(s, 1 << 20, cloud.xs, cloud.ys, a);
    vec_->strip(s, 1 << 20, cloud.xs, cloud.ys, b);
    EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace mg::kernels
