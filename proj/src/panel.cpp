#include "movegraph/panel.hpp"

namespace mg {

std::optional<std::string> PanelProxy::violation() const {
    const Limits& l = limits_;
    if (l.min_w < 1 || l.min_h < 1 || l.min_w > l.max_w || l.min_h > l.max_h) {
        return "limits out of order";
    }
    if (rect_.width < l.min_w || rect_.width > l.max_w) {
        return "width outside limits";
    }
    if (rect_.height < l.min_h || rect_.height > l.max_h) {
        return "height outside limits";
    }
    return std::nullopt;
}

// Perimeter nodes clockwise from the left-top corner.
std::vector<PanelProxy::Slot> PanelProxy::layout() const {
    const Rect& r = rect_;
    const int o = kOutset;
    const int mx = r.left + r.width / 2;
    const int my = r.top + r.height / 2;
    const bool corners_live = resize_ == ContourResize::Any;
    const bool ns = resize_ == ContourResize::NS || resize_ == ContourResize::Any;
    const bool we = resize_ == ContourResize::WE || resize_ == ContourResize::Any;

    std::vector<Slot> slots;
    auto add = [&](Handle h, Pt anchor, Delta offset, MovementFreedom freedom, CursorHint cursor) {
        ContourNode n;
        n.id = static_cast<int>(slots.size());
        n.anchor = anchor;
        n.sense_offset = offset;
        n.freedom = freedom;
        n.cursor = cursor;
        slots.push_back({h, n});
    };
    auto corner = [&](Handle h, Pt anchor, Delta offset) {
        if (corners_live) {
            add(h, anchor, offset, MovementFreedom::Any, CursorHint::SizeAll);
        } else {
            add(Handle::Inert, anchor, offset, MovementFreedom::None, CursorHint::SizeAll);
        }
    };

    corner(Handle::LeftTop, {r.left, r.top}, {-o, -o});
    if (ns) add(Handle::Top, {mx, r.top}, {0, -o}, MovementFreedom::NS, CursorHint::SizeNS);
    corner(Handle::RightTop, {r.right(), r.top}, {o, -o});
    if (we) add(Handle::Right, {r.right(), my}, {o, 0}, MovementFreedom::WE, CursorHint::SizeWE);
    corner(Handle::RightBottom, {r.right(), r.bottom()}, {o, o});
    if (ns) add(Handle::Bottom, {mx, r.bottom()}, {0, o}, MovementFreedom::NS, CursorHint::SizeNS);
    corner(Handle::LeftBottom, {r.left, r.bottom()}, {-o, o});
    if (we) add(Handle::Left, {r.left, my}, {-o, 0}, MovementFreedom::WE, CursorHint::SizeWE);
    return slots;
}

Contour PanelProxy::define_contour() const {
    std::vector<ContourNode> nodes;
    for (const Slot& s : layout()) {
        nodes.push_back(s.node);
    }
    return Contour(std::move(nodes));
}

bool PanelProxy::resize_left(int dx) {
    const int w = rect_.width - dx;
    if (w < limits_.min_w || w > limits_.max_w) return false;
    rect_.left += dx;
    rect_.width = w;
    return true;
}

bool PanelProxy::resize_right(int dx) {
    const int w = rect_.width + dx;
    if (w < limits_.min_w || w > limits_.max_w) return false;
    rect_.width = w;
    return true;
}

bool PanelProxy::resize_top(int dy) {
    const int h = rect_.height - dy;
    if (h < limits_.min_h || h > limits_.max_h) return false;
    rect_.top += dy;
    rect_.height = h;
    return true;
}

bool PanelProxy::resize_bottom(int dy) {
    const int h = rect_.height + dy;
    if (h < limits_.min_h || h > limits_.max_h) return false;
    rect_.height = h;
    return true;
}

bool PanelProxy::move_node(int id, Delta d, Pt /*mouse*/, MouseButton button) {
    if (button != MouseButton::Left) {
        return false;
    }
    const auto slots = layout();
    if (id < 0 || id >= static_cast<int>(slots.size())) {
        return false;
    }
    bool moved = false;
    switch (slots[id].handle) {
        case Handle::Inert: break;
        case Handle::Left: moved = resize_left(d.dx); break;
        case Handle::Right: moved = resize_right(d.dx); break;
        case Handle::Top: moved = resize_top(d.dy); break;
        case Handle::Bottom: moved = resize_bottom(d.dy); break;
        case Handle::LeftTop:
            moved |= resize_top(d.dy);
            moved |= resize_left(d.dx);
            break;
        case Handle::RightTop:
            moved |= resize_top(d.dy);
            moved |= resize_right(d.dx);
            break;
        case Handle::RightBottom:
            moved |= resize_bottom(d.dy);
            moved |= resize_right(d.dx);
            break;
        case Handle::LeftBottom:
            moved |= resize_bottom(d.dy);
            moved |= resize_left(d.dx);
            break;
    }
    return moved;
}

}  // namespace mg
