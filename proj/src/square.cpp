#include "movegraph/square.hpp"

#include <algorithm>

namespace mg {
namespace {

ContourNode inert(int id, Pt p) {
    ContourNode n;
    n.id = id;
    n.anchor = p;
    n.freedom = MovementFreedom::None;
    n.cursor = CursorHint::SizeAll;
    return n;
}

}  // namespace

std::optional<std::string> SquareObj::violation() const {
    if (rect_.width != rect_.height) {
        return "not a square";
    }
    if (rect_.width < 4) {
        return "side below minimum";
    }
    return std::nullopt;
}

int SquareObj::two_node_sensitivity() const {
    return std::min(rect_.width, rect_.height) / 2 - 1;
}

Contour SquareObj::define_contour() const {
    const Pt mid = rect_.middle();
    switch (kind_) {
        case Kind::TwoNode: {
            std::vector<ContourNode> nodes{inert(0, {mid.x - 1, mid.y}), inert(1, {mid.x + 1, mid.y})};
            return Contour(std::move(nodes), {{0, 1, two_node_sensitivity()}});
        }
        case Kind::FourNode: {
            // Halfway between each corner and the middle.
            const int qx = (rect_.width / 2) / 2;
            const int qy = (rect_.height / 2) / 2;
            std::vector<ContourNode> nodes{
                inert(0, {mid.x - qx, mid.y - qy}),
                inert(1, {mid.x + qx, mid.y - qy}),
                inert(2, {mid.x + qx, mid.y + qy}),
                inert(3, {mid.x - qx, mid.y + qy}),
            };
            const int s = two_node_sensitivity() / 2;
            return Contour(std::move(nodes), {{0, 1, s}, {1, 2, s}, {2, 3, s}, {3, 0, s}});
        }
        case Kind::OneNode: {
            ContourNode n;
            n.id = 0;
            n.anchor = mid;
            n.freedom = MovementFreedom::Any;
            n.cursor = CursorHint::Hand;
            n.sense_size = std::max(1, rect_.width / 2);
            return Contour({n}, {});
        }
    }
    return Contour({inert(0, mid)}, {});
}

bool SquareObj::move_node(int /*id*/, Delta d, Pt /*mouse*/, MouseButton button) {
    if (kind_ != Kind::OneNode || button != MouseButton::Left) {
        return false;
    }
    move(d);
    return true;
}

}  // namespace mg
