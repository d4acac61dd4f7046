#pragma once

#include "movegraph/movable.hpp"

namespace mg {

/// Moveable, non-resizable square with three interchangeable contours:
///  - TwoNode: two inert nodes 2 px apart in the middle; one wide strip.
///  - FourNode: four inert nodes halfway to the corners; four half-width strips.
///  - OneNode: a single square node covering the whole square.
class SquareObj final : public MovableObject {
public:
    enum class Kind { TwoNode, FourNode, OneNode };

    SquareObj() = default;
    SquareObj(Rect rect, Kind kind) : rect_(rect), kind_(kind) {}

    const Rect& rect() const { return rect_; }
    Kind kind() const { return kind_; }

    std::optional<std::string> violation() const;

    /// Strip half-width used by the TwoNode contour.
    int two_node_sensitivity() const;

    Contour define_contour() const override;
    void move(Delta d) override { rect_.offset(d); }
    bool move_node(int id, Delta d, Pt mouse, MouseButton button) override;

    friend bool operator==(const SquareObj& a, const SquareObj& b) {
        return a.rect_ == b.rect_ && a.kind_ == b.kind_;
    }

private:
    Rect rect_;
    Kind kind_ = Kind::TwoNode;
};

}  // namespace mg
