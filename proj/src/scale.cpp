#include "movegraph/scale.hpp"

namespace mg {
namespace {

ContourNode make_node(int id, Pt anchor, Delta offset, MovementFreedom freedom, CursorHint cursor) {
    ContourNode n;
    n.id = id;
    n.anchor = anchor;
    n.sense_offset = offset;
    n.freedom = freedom;
    n.cursor = cursor;
    return n;
}

}  // namespace

std::optional<std::string> HScale::violation() const {
    if (bounds_.cx_left >= bounds_.cx_right || bounds_.cy_top >= bounds_.cy_bottom) {
        return "borders out of order";
    }
    if (min_width_ < 1) {
        return "min_width out of range";
    }
    if (width() < min_width_) {
        return "width below minimum";
    }
    return std::nullopt;
}

Contour HScale::define_contour() const {
    const auto& b = bounds_;
    const int s = shift_;
    const int cy_mid = cy_middle();
    using enum MovementFreedom;
    if (variant_ == Variant::MidLine) {
        return Contour({
            make_node(0, {b.cx_right, cy_mid}, {s, 0}, WE, CursorHint::SizeWE),
            make_node(1, {b.cx_left, cy_mid}, {-s, 0}, WE, CursorHint::SizeWE),
        });
    }
    return Contour({
        make_node(0, {b.cx_left, b.cy_top}, {-s, -s}, None, CursorHint::SizeAll),
        make_node(1, {b.cx_right, b.cy_top}, {s, -s}, None, CursorHint::SizeAll),
        make_node(2, {b.cx_right, cy_mid}, {s, 0}, WE, CursorHint::SizeWE),
        make_node(3, {b.cx_right, b.cy_bottom}, {s, s}, None, CursorHint::SizeAll),
        make_node(4, {b.cx_left, b.cy_bottom}, {-s, s}, None, CursorHint::SizeAll),
        make_node(5, {b.cx_left, cy_mid}, {-s, 0}, WE, CursorHint::SizeWE),
    });
}

void HScale::move(Delta d) {
    bounds_.cx_left += d.dx;
    bounds_.cx_right += d.dx;
    bounds_.cy_top += d.dy;
    bounds_.cy_bottom += d.dy;
}

bool HScale::move_node(int id, Delta d, Pt /*mouse*/, MouseButton button) {
    if (button != MouseButton::Left) {
        return false;
    }
    if (id == right_handle()) {
        if (width() + d.dx >= min_width_) {
            bounds_.cx_right += d.dx;
            return true;
        }
    } else if (id == left_handle()) {
        if (width() - d.dx >= min_width_) {
            bounds_.cx_left += d.dx;
            return true;
        }
    }
    return false;
}

}  // namespace mg
