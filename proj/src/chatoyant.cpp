#include "movegraph/chatoyant.hpp"

#include <stdexcept>

namespace mg {

Contour Graph::define_contour() const {
    std::vector<ContourNode> nodes;
    nodes.reserve(points_.size());
    for (std::size_t k = 0; k < points_.size(); ++k) {
        ContourNode n;
        n.id = static_cast<int>(k);
        n.anchor = points_[k];
        n.freedom = MovementFreedom::Any;
        n.cursor = CursorHint::Hand;
        nodes.push_back(n);
    }
    std::vector<Connection> conns;
    conns.reserve(links_.size());
    for (auto [i, j] : links_) {
        conns.push_back({i, j, std::nullopt});
    }
    return Contour(std::move(nodes), std::move(conns));
}

void Graph::move(Delta d) {
    for (Pt& p : points_) {
        p += d;
    }
}

bool Graph::move_node(int id, Delta d, Pt /*mouse*/, MouseButton button) {
    if (button != MouseButton::Left || id < 0 || id >= static_cast<int>(points_.size())) {
        return false;
    }
    points_[id] += d;
    return true;
}

Graph ChatoyantPoly::graph() const {
    const int n = static_cast<int>(points.size());
    std::vector<Pt> pts = points;
    pts.push_back(center);
    std::vector<std::pair<int, int>> links;
    links.reserve(2 * points.size());
    for (int k = 0; k < n; ++k) {
        links.emplace_back(k, (k + 1) % n);
    }
    for (int k = 0; k < n; ++k) {
        links.emplace_back(n, k);
    }
    return Graph(std::move(pts), std::move(links));
}

ChatoyantPoly ChatoyantPoly::from_graph(const Graph& g) {
    const auto& pts = g.points();
    if (pts.size() < 4) {
        throw std::invalid_argument("graph does not carry a chatoyant polygon");
    }
    return {std::vector<Pt>(pts.begin(), pts.end() - 1), pts.back()};
}

Contour chatoyant_graph(const ChatoyantPoly& poly) {
    return poly.graph().define_contour();
}

ChatoyantPoly chatoyant_rotate(const ChatoyantPoly& poly, Pt mouse_start, Pt mouse_now) {
    const double sweep =
        screen_angle_deg(poly.center, mouse_now) - screen_angle_deg(poly.center, mouse_start);
    ChatoyantPoly out = poly;
    for (Pt& p : out.points) {
        p = rotate_point(poly.center, p, sweep);
    }
    return out;
}

}  // namespace mg
