#pragma once

// The mover: an ordered registry of movable objects (index 0 is topmost) and
// the press / move / release state machine that turns pointer events into
// whole-object moves and per-node reconfiguration.

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "movegraph/movable.hpp"

namespace mg {

struct Rgb {
    std::uint8_t r = 255;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(Rgb, Rgb) = default;
};

enum class HitPart { Node, Connection };

struct HitInfo {
    std::size_t entry = 0;
    HitPart part = HitPart::Node;
    int id = 0;  // node id, or connection index for HitPart::Connection

    friend bool operator==(const HitInfo&, const HitInfo&) = default;
};

struct Idle {
    friend bool operator==(const Idle&, const Idle&) = default;
};

struct CaughtNode {
    std::size_t entry = 0;
    int node_id = 0;
    MouseButton button = MouseButton::Left;
    Pt last_mouse;
    Pt catch_mouse;
    MovementFreedom freedom = MovementFreedom::Any;

    friend bool operator==(const CaughtNode&, const CaughtNode&) = default;
};

struct CaughtConnection {
    std::size_t entry = 0;
    std::size_t connection = 0;
    MouseButton button = MouseButton::Left;
    Pt last_mouse;

    friend bool operator==(const CaughtConnection&, const CaughtConnection&) = default;
};

using CatchState = std::variant<Idle, CaughtNode, CaughtConnection>;

class Mover {
public:
    using Entry = std::shared_ptr<MovableObject>;

    std::size_t add(Entry object);
    void insert(std::size_t index, Entry object);
    void remove_at(std::size_t index);
    /// remove_at + insert at the same index. A catch on that entry survives
    /// only if the caught node (or connection) still exists in the new contour.
    void replace_entry(std::size_t index, Entry object);

    std::size_t count() const { return entries_.size(); }
    MovableObject& operator[](std::size_t index) { return *entries_.at(index).object; }
    const MovableObject& operator[](std::size_t index) const { return *entries_.at(index).object; }
    const Entry& entry(std::size_t index) const { return entries_.at(index).object; }
    const Contour& contour(std::size_t index) const { return entries_.at(index).contour; }

    /// What a press at p with button would grab, without grabbing it.
    std::optional<HitInfo> probe(Pt p, MouseButton button = MouseButton::Left) const;

    /// Press. Ignored (returns is_caught()) while something is already caught.
    bool catch_at(Pt p, MouseButton button = MouseButton::Left);
    /// Pointer motion. Returns the object's verdict for node drags, true for
    /// whole-object drags and false while idle.
    bool moving(Pt p);
    void release();

    bool is_caught() const { return !std::holds_alternative<Idle>(state_); }
    const CatchState& state() const { return state_; }
    std::optional<std::size_t> caught_entry() const;

    CursorHint cursor_hint_at(Pt p) const;

    ContourDrawables contour_drawables(std::size_t index) const;
    /// Drawables in painting order: the last entry first, entry 0 last.
    std::vector<ContourDrawables> all_drawables() const;

    Rgb contour_color() const { return color_; }
    void set_contour_color(Rgb c) { color_ = c; }
    int line_sensitivity() const { return line_sensitivity_; }
    void set_line_sensitivity(int s) { line_sensitivity_ = s; }

private:
    struct Slot {
        Entry object;
        Contour contour;
    };

    static Slot make_slot(Entry object);
    std::optional<HitInfo> hit(Pt p) const;

    std::vector<Slot> entries_;
    CatchState state_ = Idle{};
    Rgb color_;
    int line_sensitivity_ = kDefaultConnectionSensitivity;
};

/// Zeroes the components of d that the freedom does not allow.
Delta gate_delta(MovementFreedom freedom, Delta d);

}  // namespace mg
