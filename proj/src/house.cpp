#include "movegraph/house.hpp"

#include <algorithm>

namespace mg {

std::optional<std::string> House::violation() const {
    const HouseMinima& m = minima_;
    if (m.min_width < 1 || m.min_height < 1 || m.min_roof_side < 0 || m.min_roof_h < 1) {
        return "minima out of range";
    }
    if (m.min_width < 2 * m.min_roof_side) {
        return "min_width smaller than twice min_roof_side";
    }
    if (rect_.width < m.min_width) {
        return "width below minimum";
    }
    if (rect_.height < m.min_height) {
        return "height below minimum";
    }
    if (rect_.top - roof_top_.y < m.min_roof_h) {
        return "roof below minimum height";
    }
    if (roof_top_.x < rect_.left + m.min_roof_side || roof_top_.x > rect_.right() - m.min_roof_side) {
        return "roof apex too close to a wall";
    }
    return std::nullopt;
}

Contour House::define_contour() const {
    auto node = [](int id, Pt p) {
        ContourNode n;
        n.id = id;
        n.anchor = p;
        n.freedom = MovementFreedom::Any;
        n.cursor = CursorHint::Hand;
        return n;
    };
    std::vector<ContourNode> nodes{
        node(0, {rect_.left, rect_.top}),       node(1, {rect_.right(), rect_.top}),
        node(2, {rect_.right(), rect_.bottom()}), node(3, {rect_.left, rect_.bottom()}),
        node(4, roof_top_),
    };
    std::vector<Connection> conns{{0, 1, {}}, {1, 2, {}}, {2, 3, {}},
                                  {3, 0, {}}, {0, 4, {}}, {1, 4, {}}};
    return Contour(std::move(nodes), std::move(conns));
}

void House::move(Delta d) {
    rect_.offset(d);
    roof_top_ += d;
}

void House::clamp_roof_x() {
    roof_top_.x = std::min(std::max(rect_.left + minima_.min_roof_side, roof_top_.x),
                           rect_.right() - minima_.min_roof_side);
}

// The roof keeps its height when the top edge moves.
bool House::move_top(int dy) {
    if (rect_.height - dy < minima_.min_height) {
        return false;
    }
    rect_.top += dy;
    rect_.height -= dy;
    roof_top_.y += dy;
    return true;
}

bool House::move_bottom(int dy) {
    if (rect_.height + dy < minima_.min_height) {
        return false;
    }
    rect_.height += dy;
    return true;
}

// The apex travels with the moving wall, then is pulled back inside the
// allowed band.
bool House::move_left(int dx) {
    if (rect_.width - dx < minima_.min_width) {
        return false;
    }
    rect_.left += dx;
    rect_.width -= dx;
    roof_top_.x += dx;
    clamp_roof_x();
    return true;
}

bool House::move_right(int dx) {
    if (rect_.width + dx < minima_.min_width) {
        return false;
    }
    rect_.width += dx;
    roof_top_.x += dx;
    clamp_roof_x();
    return true;
}

bool House::move_node(int id, Delta d, Pt /*mouse*/, MouseButton button) {
    if (button != MouseButton::Left) {
        return false;
    }
    bool moved = false;
    switch (id) {
        case 0:
            moved |= move_top(d.dy);
            moved |= move_left(d.dx);
            break;
        case 1:
            moved |= move_top(d.dy);
            moved |= move_right(d.dx);
            break;
        case 2:
            moved |= move_bottom(d.dy);
            moved |= move_right(d.dx);
            break;
        case 3:
            moved |= move_bottom(d.dy);
            moved |= move_left(d.dx);
            break;
        case 4:
            if (roof_top_.y + d.dy <= rect_.top - minima_.min_roof_h) {
                roof_top_.y += d.dy;
                moved = true;
            }
            if (rect_.left + minima_.min_roof_side <= roof_top_.x + d.dx &&
                roof_top_.x + d.dx <= rect_.right() - minima_.min_roof_side) {
                roof_top_.x += d.dx;
                moved = true;
            }
            break;
        default:
            break;
    }
    return moved;
}

}  // namespace mg
