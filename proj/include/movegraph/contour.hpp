#pragma once

// Contour model: sensitive nodes plus connecting strips. A contour is the only
// thing the mover hit-tests; it never needs to resemble the object's shape.

#include <optional>
#include <span>
#include <vector>

#include "movegraph/geometry.hpp"

namespace mg {

enum class MovementFreedom { None, NS, WE, Any };
enum class NodeShape { Square, Circle };
enum class CursorHint { Default, Hand, SizeAll, SizeWE, SizeNS };

inline constexpr int kDefaultNodeSize = 3;  // half-extent: a 6-px square
inline constexpr int kDefaultConnectionSensitivity = 3;

struct ContourNode {
    int id = 0;
    Pt anchor;
    Delta sense_offset;
    MovementFreedom freedom = MovementFreedom::Any;
    CursorHint cursor = CursorHint::Default;
    NodeShape shape = NodeShape::Square;
    int sense_size = kDefaultNodeSize;
    bool clearance = true;

    friend bool operator==(const ContourNode&, const ContourNode&) = default;
};

/// Strip between two nodes. An empty sensitivity inherits the default
/// supplied by whoever hit-tests the contour (the mover's line sensitivity).
struct Connection {
    int i = 0;
    int j = 0;
    std::optional<int> sensitivity;

    friend bool operator==(const Connection&, const Connection&) = default;
};

struct Marker {
    Pt center;
    NodeShape shape = NodeShape::Square;
    int size = kDefaultNodeSize;
    bool clearance = true;

    friend bool operator==(const Marker&, const Marker&) = default;
};

struct ContourDrawables {
    std::vector<Seg> segments;
    std::vector<Marker> markers;

    friend bool operator==(const ContourDrawables&, const ContourDrawables&) = default;
};

constexpr Pt sense_center(const ContourNode& node) {
    return node.anchor + node.sense_offset;
}

/// True when p lies in the node's sense area (inclusive boundary). Nodes with
/// freedom None have no sense area.
bool node_contains(const ContourNode& node, Pt p);

class Contour {
public:
    /// Throws std::invalid_argument on bad numbering or dangling connections.
    Contour(std::vector<ContourNode> nodes, std::vector<Connection> connections);

    /// Ring constructor: links each node to the next and the last back to the
    /// first. Two nodes produce a single connection, one node none.
    explicit Contour(std::vector<ContourNode> nodes);

    const std::vector<ContourNode>& nodes() const { return nodes_; }
    const std::vector<Connection>& connections() const { return connections_; }

    /// Node with the given id; the id must exist.
    const ContourNode& node(int id) const { return nodes_[index_of_[id]]; }
    bool has_node(int id) const { return id >= 0 && id < static_cast<int>(nodes_.size()); }

    Seg connection_segment(std::size_t k) const;
    int sensitivity(std::size_t k, int default_sensitivity = kDefaultConnectionSensitivity) const {
        return connections_[k].sensitivity.value_or(default_sensitivity);
    }

    void translate(Delta d);

    friend bool operator==(const Contour& a, const Contour& b) {
        return a.nodes_ == b.nodes_ && a.connections_ == b.connections_;
    }

private:
    void validate();

    std::vector<ContourNode> nodes_;
    std::vector<Connection> connections_;
    std::vector<std::size_t> index_of_;  // node id -> position in nodes_
};

/// Ring constructor as a free function.
Contour contour_from_nodes(std::vector<ContourNode> nodes);

/// Id of the first node (collection order) whose sense area contains p.
std::optional<int> hit_node(const Contour& contour, Pt p);

/// Index of the first connection whose strip contains p.
std::optional<std::size_t> hit_connection(const Contour& contour, Pt p,
                                          int default_sensitivity = kDefaultConnectionSensitivity);

void translate_contour(Contour& contour, Delta d);

ContourDrawables drawables(const Contour& contour);

/// Batch catchability: out[k] = 1 when (xs[k], ys[k]) hits any node or any
/// connection of the contour. Runs on the active batch kernels.
void mark_catchable(const Contour& contour, std::span<const int> xs, std::span<const int> ys,
                    std::span<unsigned char> out,
                    int default_sensitivity = kDefaultConnectionSensitivity);

}  // namespace mg
