#pragma once

#include <vector>

#include "movegraph/movable.hpp"

namespace mg {

/// One coaxial ring split into sectors whose sweep is proportional to value.
struct Ring {
    int r_in = 0;
    int r_out = 0;
    int start_deg = 0;  // [0, 360), screen-counterclockwise
    std::vector<double> values;

    friend bool operator==(const Ring&, const Ring&) = default;
};

struct RingMinima {
    int min_inner_radius = 20;
    int min_ring_width = 8;
    int min_gap = 4;

    friend bool operator==(const RingMinima&, const RingMinima&) = default;
};

struct RingTitle {
    std::string text;
    Delta offset;  // from the set's center

    friend bool operator==(const RingTitle&, const RingTitle&) = default;
};

/// Set of coaxial sectored rings.
///
/// Contour: for every sector boundary of every ring (innermost ring first),
/// an even-numbered node on the inner circle and the following odd-numbered
/// node on the outer circle, joined by one connection. The pairs are not
/// linked to each other.
///
/// Left drag on a node moves that whole circle along the radius subject to the
/// minima; right drag on any node rotates its ring with the pointer.
class RingSet final : public MovableObject {
public:
    struct NodeRef {
        std::size_t ring = 0;
        std::size_t boundary = 0;
        bool outer = false;
    };

    RingSet() = default;
    RingSet(Pt center, std::vector<Ring> rings, RingTitle title = {}, RingMinima minima = {})
        : center_(center), rings_(std::move(rings)), title_(std::move(title)), minima_(minima) {}

    Pt center() const { return center_; }
    const std::vector<Ring>& rings() const { return rings_; }
    const RingTitle& title() const { return title_; }
    const RingMinima& minima() const { return minima_; }

    std::optional<std::string> violation() const;

    /// Boundary angles of ring k in degrees, one per sector.
    std::vector<double> boundary_angles(std::size_t k) const;
    std::optional<NodeRef> locate(int id) const;
    int node_count() const;

    Contour define_contour() const override;
    void move(Delta d) override { center_ += d; }
    bool move_node(int id, Delta d, Pt mouse, MouseButton button) override;
    void on_catch(int node_id, Pt mouse, MouseButton button) override;
    void on_release() override { grabbed_angle_.reset(); }

    /// Equality over geometry only; the transient rotation cache is ignored.
    friend bool operator==(const RingSet& a, const RingSet& b) {
        return a.center_ == b.center_ && a.rings_ == b.rings_ && a.title_ == b.title_ &&
               a.minima_ == b.minima_;
    }

private:
    bool move_radially(const NodeRef& ref, Delta d);
    bool rotate(const NodeRef& ref, Pt mouse);
    bool radius_allowed(std::size_t k, bool outer, int radius) const;

    Pt center_;
    std::vector<Ring> rings_;
    RingTitle title_;
    RingMinima minima_;
    std::optional<double> grabbed_angle_;  // boundary angle of the caught node
};

}  // namespace mg
