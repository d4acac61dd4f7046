#include "movegraph/contour.hpp"

#include <stdexcept>

#include "movegraph/kernels.hpp"

namespace mg {

bool node_contains(const ContourNode& node, Pt p) {
    if (node.freedom == MovementFreedom::None) {
        return false;
    }
    const Pt c = sense_center(node);
    if (node.shape == NodeShape::Circle) {
        const std::int64_t r = node.sense_size;
        return dist2(c, p) <= r * r;
    }
    return chebyshev(c, p) <= node.sense_size;
}

Contour::Contour(std::vector<ContourNode> nodes, std::vector<Connection> connections)
    : nodes_(std::move(nodes)), connections_(std::move(connections)) {
    validate();
}

Contour::Contour(std::vector<ContourNode> nodes) : nodes_(std::move(nodes)) {
    const int n = static_cast<int>(nodes_.size());
    if (n >= 2) {
        for (int k = 0; k + 1 < n; ++k) {
            connections_.push_back({nodes_[k].id, nodes_[k + 1].id, std::nullopt});
        }
        if (n >= 3) {
            connections_.push_back({nodes_[n - 1].id, nodes_[0].id, std::nullopt});
        }
    }
    validate();
}

void Contour::validate() {
    if (nodes_.empty()) {
        throw std::invalid_argument("contour needs at least one node");
    }
    const std::size_t n = nodes_.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    index_of_.assign(n, kUnset);
    for (std::size_t k = 0; k < n; ++k) {
        const int id = nodes_[k].id;
        if (id < 0 || static_cast<std::size_t>(id) >= n || index_of_[id] != kUnset) {
            throw std::invalid_argument("invalid node numbering");
        }
        index_of_[id] = k;
        if (nodes_[k].freedom != MovementFreedom::None && nodes_[k].sense_size < 1) {
            throw std::invalid_argument("node sense size must be at least 1");
        }
    }
    for (const Connection& c : connections_) {
        if (!has_node(c.i) || !has_node(c.j) || c.i == c.j) {
            throw std::invalid_argument("invalid connection");
        }
        if (c.sensitivity && *c.sensitivity < 0) {
            throw std::invalid_argument("negative connection sensitivity");
        }
    }
}

Seg Contour::connection_segment(std::size_t k) const {
    const Connection& c = connections_[k];
    return {sense_center(node(c.i)), sense_center(node(c.j))};
}

void Contour::translate(Delta d) {
    for (ContourNode& n : nodes_) {
        n.anchor += d;
    }
}

Contour contour_from_nodes(std::vector<ContourNode> nodes) {
    return Contour(std::move(nodes));
}

std::optional<int> hit_node(const Contour& contour, Pt p) {
    for (const ContourNode& n : contour.nodes()) {
        if (node_contains(n, p)) {
            return n.id;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> hit_connection(const Contour& contour, Pt p, int default_sensitivity) {
    const auto& conns = contour.connections();
    for (std::size_t k = 0; k < conns.size(); ++k) {
        const double s = contour.sensitivity(k, default_sensitivity);
        if (dist2_point_segment(p, contour.connection_segment(k)) <= s * s) {
            return k;
        }
    }
    return std::nullopt;
}

void translate_contour(Contour& contour, Delta d) {
    contour.translate(d);
}

ContourDrawables drawables(const Contour& contour) {
    ContourDrawables out;
    out.segments.reserve(contour.connections().size());
    for (std::size_t k = 0; k < contour.connections().size(); ++k) {
        out.segments.push_back(contour.connection_segment(k));
    }
    for (const ContourNode& n : contour.nodes()) {
        if (n.freedom != MovementFreedom::None) {
            out.markers.push_back({sense_center(n), n.shape, n.sense_size, n.clearance});
        }
    }
    return out;
}

void mark_catchable(const Contour& contour, std::span<const int> xs, std::span<const int> ys,
                    std::span<unsigned char> out, int default_sensitivity) {
    if (xs.size() != ys.size() || out.size() != xs.size()) {
        throw std::invalid_argument("mark_catchable: span sizes differ");
    }
    const kernels::Table& k = kernels::active();
    for (const ContourNode& n : contour.nodes()) {
        if (n.freedom == MovementFreedom::None) {
            continue;
        }
        if (n.shape == NodeShape::Circle) {
            k.circle(sense_center(n), n.sense_size, xs, ys, out);
        } else {
            k.square(sense_center(n), n.sense_size, xs, ys, out);
        }
    }
    for (std::size_t c = 0; c < contour.connections().size(); ++c) {
        k.strip(contour.connection_segment(c), contour.sensitivity(c, default_sensitivity), xs, ys,
                out);
    }
}

}  // namespace mg
