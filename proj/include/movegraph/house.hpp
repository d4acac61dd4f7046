#pragma once

#include "movegraph/movable.hpp"

namespace mg {

struct HouseMinima {
    int min_width = 40;
    int min_height = 30;
    int min_roof_side = 10;  // roof apex distance from either wall
    int min_roof_h = 10;     // roof apex height above the body

    friend bool operator==(const HouseMinima&, const HouseMinima&) = default;
};

/// Rectangular body plus a triangular roof. Nodes 0..3 are the body corners
/// clockwise from left-top, node 4 is the roof apex.
class House final : public MovableObject {
public:
    House() = default;
    House(int number, Rect body, Pt roof_top, HouseMinima minima = {})
        : number_(number), rect_(body), roof_top_(roof_top), minima_(minima) {}

    int number() const { return number_; }
    const Rect& rect() const { return rect_; }
    Pt roof_top() const { return roof_top_; }
    const HouseMinima& minima() const { return minima_; }

    /// First violated invariant, or empty when the house is consistent.
    std::optional<std::string> violation() const;

    Contour define_contour() const override;
    void move(Delta d) override;
    bool move_node(int id, Delta d, Pt mouse, MouseButton button) override;

    friend bool operator==(const House& a, const House& b) {
        return a.number_ == b.number_ && a.rect_ == b.rect_ && a.roof_top_ == b.roof_top_ &&
               a.minima_ == b.minima_;
    }

private:
    bool move_top(int dy);
    bool move_bottom(int dy);
    bool move_left(int dx);
    bool move_right(int dx);
    void clamp_roof_x();

    int number_ = 0;
    Rect rect_;
    Pt roof_top_;
    HouseMinima minima_;
};

}  // namespace mg
