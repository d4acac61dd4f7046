#pragma once

#include <utility>
#include <vector>

#include "movegraph/movable.hpp"

namespace mg {

/// Free-form set of points joined by links. Every point is a node that moves
/// without restriction; the whole set translates through any link.
class Graph final : public MovableObject {
public:
    Graph() = default;
    Graph(std::vector<Pt> points, std::vector<std::pair<int, int>> links)
        : points_(std::move(points)), links_(std::move(links)) {}

    const std::vector<Pt>& points() const { return points_; }
    const std::vector<std::pair<int, int>>& links() const { return links_; }

    Contour define_contour() const override;
    void move(Delta d) override;
    bool move_node(int id, Delta d, Pt mouse, MouseButton button) override;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.points_ == b.points_ && a.links_ == b.links_;
    }

private:
    std::vector<Pt> points_;
    std::vector<std::pair<int, int>> links_;
};

/// Polygon with a rotation pivot. It does not implement the movable contract
/// itself; the mover is handed the graph built from it, and after a rotation
/// the host swaps in a fresh graph.
struct ChatoyantPoly {
    std::vector<Pt> points;  // apexes
    Pt center;

    std::optional<std::string> violation() const {
        if (points.size() < 3) return "fewer than 3 apexes";
        return std::nullopt;
    }

    /// Apexes become nodes 0..n-1 and the center node n. Links: the apex ring
    /// followed by one spoke from the center to every apex.
    Graph graph() const;

    /// Inverse of graph() for a graph with the same layout.
    static ChatoyantPoly from_graph(const Graph& g);

    friend bool operator==(const ChatoyantPoly&, const ChatoyantPoly&) = default;
};

/// Contour of the polygon's graph.
Contour chatoyant_graph(const ChatoyantPoly& poly);

/// Rotates every apex about the center by the angle the pointer swept from
/// mouse_start to mouse_now. Throws std::domain_error if either pointer
/// position equals the center.
ChatoyantPoly chatoyant_rotate(const ChatoyantPoly& poly, Pt mouse_start, Pt mouse_now);

}  // namespace mg
