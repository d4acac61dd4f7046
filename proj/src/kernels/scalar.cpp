#include "movegraph/kernels.hpp"

#include <cstddef>

namespace mg::kernels {
namespace {

void strip_scalar(Seg s, int sensitivity, Coords xs, Coords ys, Mask out) {
    const double limit = static_cast<double>(sensitivity) * sensitivity;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (dist2_point_segment({xs[k], ys[k]}, s) <= limit) {
            out[k] = 1;
        }
    }
}

void square_scalar(Pt center, int half, Coords xs, Coords ys, Mask out) {
    for (std::size_t k = 0; k < xs.size(); ++k) {
        int dx = xs[k] - center.x;
        int dy = ys[k] - center.y;
        dx = dx < 0 ? -dx : dx;
        dy = dy < 0 ? -dy : dy;
        if ((dx > dy ? dx : dy) <= half) {
            out[k] = 1;
        }
    }
}

void circle_scalar(Pt center, int radius, Coords xs, Coords ys, Mask out) {
    const double limit = static_cast<double>(radius) * radius;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double dx = static_cast<double>(xs[k]) - center.x;
        const double dy = static_cast<double>(ys[k]) - center.y;
        if (dx * dx + dy * dy <= limit) {
            out[k] = 1;
        }
    }
}

}  // namespace

const Table& scalar() {
    static const Table table{"scalar", &strip_scalar, &square_scalar, &circle_scalar};
    return table;
}

}  // namespace mg::kernels
