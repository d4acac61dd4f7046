#include "movegraph/rings.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace mg {
namespace {

int wrap360(int deg) {
    const int r = deg % 360;
    return r < 0 ? r + 360 : r;
}

}  // namespace

std::optional<std::string> RingSet::violation() const {
    const RingMinima& m = minima_;
    if (m.min_inner_radius < 0 || m.min_ring_width < 1 || m.min_gap < 0) {
        return "minima out of range";
    }
    if (rings_.empty()) {
        return "no rings";
    }
    for (std::size_t k = 0; k < rings_.size(); ++k) {
        const Ring& r = rings_[k];
        if (r.values.size() < 2) {
            return "ring " + std::to_string(k) + " has fewer than 2 sectors";
        }
        for (double v : r.values) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                return "ring " + std::to_string(k) + " has a non-positive value";
            }
        }
        if (r.start_deg < 0 || r.start_deg >= 360) {
            return "ring " + std::to_string(k) + " start angle out of range";
        }
        if (r.r_out - r.r_in < m.min_ring_width) {
            return "ring " + std::to_string(k) + " width below minimum";
        }
        if (k == 0 && r.r_in < m.min_inner_radius) {
            return "inner radius below minimum";
        }
        if (k > 0 && r.r_in - rings_[k - 1].r_out < m.min_gap) {
            return "ring " + std::to_string(k) + " gap below minimum";
        }
    }
    return std::nullopt;
}

std::vector<double> RingSet::boundary_angles(std::size_t k) const {
    const Ring& r = rings_[k];
    const double total = std::accumulate(r.values.begin(), r.values.end(), 0.0);
    std::vector<double> out;
    out.reserve(r.values.size());
    double cum = 0.0;
    for (double v : r.values) {
        out.push_back(r.start_deg + 360.0 * cum / total);
        cum += v;
    }
    return out;
}

int RingSet::node_count() const {
    int n = 0;
    for (const Ring& r : rings_) {
        n += 2 * static_cast<int>(r.values.size());
    }
    return n;
}

std::optional<RingSet::NodeRef> RingSet::locate(int id) const {
    if (id < 0) {
        return std::nullopt;
    }
    int pair = id / 2;
    for (std::size_t k = 0; k < rings_.size(); ++k) {
        const int sectors = static_cast<int>(rings_[k].values.size());
        if (pair < sectors) {
            return NodeRef{k, static_cast<std::size_t>(pair), (id % 2) == 1};
        }
        pair -= sectors;
    }
    return std::nullopt;
}

Contour RingSet::define_contour() const {
    std::vector<ContourNode> nodes;
    std::vector<Connection> conns;
    nodes.reserve(node_count());
    int id = 0;
    for (std::size_t k = 0; k < rings_.size(); ++k) {
        const Ring& r = rings_[k];
        for (double angle : boundary_angles(k)) {
            for (int radius : {r.r_in, r.r_out}) {
                ContourNode n;
                n.id = id++;
                n.anchor = rotate_point(center_, center_ + Delta{radius, 0}, angle);
                n.freedom = MovementFreedom::Any;
                n.cursor = CursorHint::Hand;
                nodes.push_back(n);
            }
            conns.push_back({id - 2, id - 1, std::nullopt});
        }
    }
    return Contour(std::move(nodes), std::move(conns));
}

bool RingSet::radius_allowed(std::size_t k, bool outer, int radius) const {
    const Ring& r = rings_[k];
    if (outer) {
        if (radius - r.r_in < minima_.min_ring_width) {
            return false;
        }
        // The outermost circle has no upper bound.
        return k + 1 == rings_.size() || rings_[k + 1].r_in - radius >= minima_.min_gap;
    }
    if (r.r_out - radius < minima_.min_ring_width) {
        return false;
    }
    if (k == 0) {
        return radius >= minima_.min_inner_radius;
    }
    return radius - rings_[k - 1].r_out >= minima_.min_gap;
}

// Only the radial component of the drag counts; the whole circle follows.
bool RingSet::move_radially(const NodeRef& ref, Delta d) {
    const double rad = boundary_angles(ref.ring)[ref.boundary] * std::numbers::pi / 180.0;
    const double along = d.dx * std::cos(rad) - d.dy * std::sin(rad);
    Ring& r = rings_[ref.ring];
    const int proposed = (ref.outer ? r.r_out : r.r_in) + static_cast<int>(std::lround(along));
    if (!radius_allowed(ref.ring, ref.outer, proposed)) {
        return false;
    }
    (ref.outer ? r.r_out : r.r_in) = proposed;
    return true;
}

bool RingSet::rotate(const NodeRef& ref, Pt mouse) {
    if (mouse == center_) {
        return false;
    }
    if (!grabbed_angle_) {
        grabbed_angle_ = boundary_angles(ref.ring)[ref.boundary];
    }
    const double now = screen_angle_deg(center_, mouse);
    const double diff = normalize_deg(now - *grabbed_angle_);
    if (std::abs(diff) > 1.0) {
        const int add = static_cast<int>(std::nearbyint(diff));
        Ring& r = rings_[ref.ring];
        r.start_deg = wrap360(r.start_deg + add);
        grabbed_angle_ = normalize_deg(*grabbed_angle_ + add);
    }
    // The contour is rebuilt by the caller, so the result carries no meaning.
    return true;
}

bool RingSet::move_node(int id, Delta d, Pt mouse, MouseButton button) {
    const auto ref = locate(id);
    if (!ref) {
        return false;
    }
    if (button == MouseButton::Right) {
        return rotate(*ref, mouse);
    }
    return move_radially(*ref, d);
}

void RingSet::on_catch(int node_id, Pt /*mouse*/, MouseButton /*button*/) {
    grabbed_angle_.reset();
    if (const auto ref = locate(node_id)) {
        grabbed_angle_ = boundary_angles(ref->ring)[ref->boundary];
    }
}

}  // namespace mg
