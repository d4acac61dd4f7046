#pragma once

#include <optional>
#include <string>

#include "movegraph/contour.hpp"

namespace mg {

enum class MouseButton { Left, Right };

/// Contract for anything the mover can drag.
///
/// define_contour() describes the object's current geometry as nodes and
/// connections. move() translates the whole object. move_node() proposes a
/// per-node displacement; the object applies whatever part its constraints
/// allow and reports whether any axis was accepted. Objects that rebuild many
/// nodes at once (rotation) may return an arbitrary value; the mover always
/// re-reads define_contour() after dispatch.
class MovableObject {
public:
    virtual ~MovableObject() = default;

    virtual Contour define_contour() const = 0;
    virtual void move(Delta d) = 0;
    virtual bool move_node(int id, Delta d, Pt mouse, MouseButton button) = 0;

    /// Called when the mover catches one of this object's nodes.
    virtual void on_catch(int /*node_id*/, Pt /*mouse*/, MouseButton /*button*/) {}
    /// Called when a catch on this object ends.
    virtual void on_release() {}

    Contour current_contour() const { return define_contour(); }

protected:
    MovableObject() = default;
    MovableObject(const MovableObject&) = default;
    MovableObject& operator=(const MovableObject&) = default;
};

}  // namespace mg
