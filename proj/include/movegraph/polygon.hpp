#pragma once

#include "movegraph/movable.hpp"

namespace mg {

/// Regular polygon grabbed through one circular node that covers its
/// circumscribed circle.
class RegularPolygonObj final : public MovableObject {
public:
    RegularPolygonObj() = default;
    RegularPolygonObj(Pt center, int radius, int sides)
        : center_(center), radius_(radius), sides_(sides) {}

    Pt center() const { return center_; }
    int radius() const { return radius_; }
    int sides() const { return sides_; }

    std::optional<std::string> violation() const {
        if (radius_ < 1) return "radius below minimum";
        if (sides_ < 3) return "fewer than 3 sides";
        return std::nullopt;
    }

    Contour define_contour() const override {
        ContourNode n;
        n.id = 0;
        n.anchor = center_;
        n.freedom = MovementFreedom::Any;
        n.cursor = CursorHint::Hand;
        n.shape = NodeShape::Circle;
        n.sense_size = radius_;
        return Contour({n}, {});
    }

    void move(Delta d) override { center_ += d; }

    bool move_node(int /*id*/, Delta d, Pt /*mouse*/, MouseButton button) override {
        if (button != MouseButton::Left) {
            return false;
        }
        move(d);
        return true;
    }

    friend bool operator==(const RegularPolygonObj& a, const RegularPolygonObj& b) {
        return a.center_ == b.center_ && a.radius_ == b.radius_ && a.sides_ == b.sides_;
    }

private:
    Pt center_;
    int radius_ = 1;
    int sides_ = 3;
};

}  // namespace mg
