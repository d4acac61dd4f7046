#pragma once

#include "movegraph/movable.hpp"

namespace mg {

enum class ContourResize { None, NS, WE, Any };

/// Stand-in for a host control registered with resize limits. The contour
/// sits slightly outside the rectangle; which handles exist depends on the
/// resize mode.
class PanelProxy final : public MovableObject {
public:
    struct Limits {
        int min_w = 0;
        int max_w = 0;
        int min_h = 0;
        int max_h = 0;

        friend bool operator==(const Limits&, const Limits&) = default;
    };

    static constexpr int kOutset = 3;

    PanelProxy() = default;
    PanelProxy(Rect rect, ContourResize resize, Limits limits)
        : rect_(rect), resize_(resize), limits_(limits) {}

    const Rect& rect() const { return rect_; }
    ContourResize resize() const { return resize_; }
    const Limits& limits() const { return limits_; }

    std::optional<std::string> violation() const;

    Contour define_contour() const override;
    void move(Delta d) override { rect_.offset(d); }
    bool move_node(int id, Delta d, Pt mouse, MouseButton button) override;

    friend bool operator==(const PanelProxy& a, const PanelProxy& b) {
        return a.rect_ == b.rect_ && a.resize_ == b.resize_ && a.limits_ == b.limits_;
    }

private:
    enum class Handle { Inert, Left, Right, Top, Bottom, LeftTop, RightTop, RightBottom, LeftBottom };

    struct Slot {
        Handle handle;
        ContourNode node;
    };
    std::vector<Slot> layout() const;

    bool resize_left(int dx);
    bool resize_right(int dx);
    bool resize_top(int dy);
    bool resize_bottom(int dy);

    Rect rect_;
    ContourResize resize_ = ContourResize::None;
    Limits limits_;
};

}  // namespace mg
