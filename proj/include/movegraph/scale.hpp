#pragma once

#include "movegraph/movable.hpp"

namespace mg {

/// Horizontally resizable scale. The Frame contour surrounds the scale with
/// four inert corner nodes and two WE side handles; the MidLine contour keeps
/// only the side handles joined through the middle.
class HScale final : public MovableObject {
public:
    enum class Variant { Frame, MidLine };

    struct Bounds {
        int cx_left = 0;
        int cx_right = 0;
        int cy_top = 0;
        int cy_bottom = 0;

        friend bool operator==(const Bounds&, const Bounds&) = default;
    };

    HScale() = default;
    HScale(Bounds bounds, int shift, Variant variant, int min_width)
        : bounds_(bounds), shift_(shift), variant_(variant), min_width_(min_width) {}

    const Bounds& bounds() const { return bounds_; }
    int shift() const { return shift_; }
    Variant variant() const { return variant_; }
    int min_width() const { return min_width_; }
    int width() const { return bounds_.cx_right - bounds_.cx_left; }
    int cy_middle() const { return bounds_.cy_top + (bounds_.cy_bottom - bounds_.cy_top) / 2; }

    std::optional<std::string> violation() const;

    /// Node ids of the right and left side handles for the current variant.
    int right_handle() const { return variant_ == Variant::Frame ? 2 : 0; }
    int left_handle() const { return variant_ == Variant::Frame ? 5 : 1; }

    Contour define_contour() const override;
    void move(Delta d) override;
    bool move_node(int id, Delta d, Pt mouse, MouseButton button) override;

    friend bool operator==(const HScale& a, const HScale& b) {
        return a.bounds_ == b.bounds_ && a.shift_ == b.shift_ && a.variant_ == b.variant_ &&
               a.min_width_ == b.min_width_;
    }

private:
    Bounds bounds_;
    int shift_ = 8;
    Variant variant_ = Variant::Frame;
    int min_width_ = 30;
};

}  // namespace mg
