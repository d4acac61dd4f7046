#pragma once

// Batch hit-test kernels over point arrays. Each kernel ORs 1 into out[k] for
// every point inside the tested area and leaves other entries untouched.
//
// The scalar table is the reference. Vector tables must produce identical
// masks for coordinates within +/- kKernelCoordLimit.

#include <span>

#include "movegraph/geometry.hpp"

namespace mg::kernels {

inline constexpr int kKernelCoordLimit = 1 << 24;

using Coords = std::span<const int>;
using Mask = std::span<unsigned char>;

struct Table {
    const char* name;
    /// Points within `sensitivity` (Euclidean, inclusive) of segment s.
    void (*strip)(Seg s, int sensitivity, Coords xs, Coords ys, Mask out);
    /// Points within Chebyshev distance `half` of center.
    void (*square)(Pt center, int half, Coords xs, Coords ys, Mask out);
    /// Points within Euclidean distance `radius` of center.
    void (*circle)(Pt center, int radius, Coords xs, Coords ys, Mask out);
};

const Table& scalar();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const Table* avx2();

/// Table used by library code. Picks AVX2 when available unless the
/// MOVEGRAPH_KERNELS environment variable is set to "scalar".
const Table& active();

}  // namespace mg::kernels
