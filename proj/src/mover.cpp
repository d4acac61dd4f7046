#include "movegraph/mover.hpp"

#include <stdexcept>

namespace mg {
namespace {

void check_index(std::size_t index, std::size_t limit) {
    if (index >= limit) {
        throw std::out_of_range("index out of range");
    }
}

}  // namespace

Delta gate_delta(MovementFreedom freedom, Delta d) {
    switch (freedom) {
        case MovementFreedom::None: return {};
        case MovementFreedom::NS: return {0, d.dy};
        case MovementFreedom::WE: return {d.dx, 0};
        case MovementFreedom::Any: return d;
    }
    return {};
}

Mover::Slot Mover::make_slot(Entry object) {
    if (!object) {
        throw std::invalid_argument("null movable object");
    }
    Contour c = object->define_contour();
    return Slot{std::move(object), std::move(c)};
}

std::size_t Mover::add(Entry object) {
    entries_.push_back(make_slot(std::move(object)));
    return entries_.size() - 1;
}

void Mover::insert(std::size_t index, Entry object) {
    check_index(index, entries_.size() + 1);
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(index),
                    make_slot(std::move(object)));
    std::visit(
        [&](auto& s) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(s)>, Idle>) {
                if (s.entry >= index) ++s.entry;
            }
        },
        state_);
}

void Mover::remove_at(std::size_t index) {
    check_index(index, entries_.size());
    if (const auto caught = caught_entry()) {
        if (*caught == index) {
            release();
        } else if (*caught > index) {
            std::visit(
                [](auto& s) {
                    if constexpr (!std::is_same_v<std::decay_t<decltype(s)>, Idle>) --s.entry;
                },
                state_);
        }
    }
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(index));
}

void Mover::replace_entry(std::size_t index, Entry object) {
    check_index(index, entries_.size());
    Slot fresh = make_slot(std::move(object));
    if (caught_entry() == index) {
        bool keep = false;
        if (const auto* n = std::get_if<CaughtNode>(&state_)) {
            keep = fresh.contour.has_node(n->node_id);
        } else if (const auto* c = std::get_if<CaughtConnection>(&state_)) {
            keep = c->connection < fresh.contour.connections().size();
        }
        if (!keep) {
            release();
        }
    }
    entries_[index] = std::move(fresh);
}

std::optional<std::size_t> Mover::caught_entry() const {
    if (const auto* n = std::get_if<CaughtNode>(&state_)) return n->entry;
    if (const auto* c = std::get_if<CaughtConnection>(&state_)) return c->entry;
    return std::nullopt;
}

// Nodes are tested before strips within each entry; entries from the top.
std::optional<HitInfo> Mover::hit(Pt p) const {
    for (std::size_t e = 0; e < entries_.size(); ++e) {
        const Contour& c = entries_[e].contour;
        if (const auto id = hit_node(c, p)) {
            return HitInfo{e, HitPart::Node, *id};
        }
        if (const auto k = hit_connection(c, p, line_sensitivity_)) {
            return HitInfo{e, HitPart::Connection, static_cast<int>(*k)};
        }
    }
    return std::nullopt;
}

std::optional<HitInfo> Mover::probe(Pt p, MouseButton button) const {
    auto h = hit(p);
    // Whole-object moves are left-button only.
    if (h && h->part == HitPart::Connection && button != MouseButton::Left) {
        return std::nullopt;
    }
    return h;
}

bool Mover::catch_at(Pt p, MouseButton button) {
    if (is_caught()) {
        return true;
    }
    const auto h = probe(p, button);
    if (!h) {
        return false;
    }
    Slot& slot = entries_[h->entry];
    if (h->part == HitPart::Node) {
        const ContourNode& node = slot.contour.node(h->id);
        state_ = CaughtNode{h->entry, h->id, button, p, p, node.freedom};
        slot.object->on_catch(h->id, p, button);
    } else {
        state_ = CaughtConnection{h->entry, static_cast<std::size_t>(h->id), button, p};
    }
    return true;
}

bool Mover::moving(Pt p) {
    if (auto* c = std::get_if<CaughtConnection>(&state_)) {
        Slot& slot = entries_[c->entry];
        const Delta d = p - c->last_mouse;
        slot.object->move(d);
        // Re-read rather than translate so the cache can never drift from the object.
        slot.contour = slot.object->define_contour();
        c->last_mouse = p;
        return true;
    }
    if (auto* n = std::get_if<CaughtNode>(&state_)) {
        Slot& slot = entries_[n->entry];
        const Delta d = gate_delta(n->freedom, p - n->last_mouse);
        const bool result = slot.object->move_node(n->node_id, d, p, n->button);
        slot.contour = slot.object->define_contour();
        n->last_mouse = p;
        return result;
    }
    return false;
}

void Mover::release() {
    if (const auto e = caught_entry(); e && *e < entries_.size()) {
        entries_[*e].object->on_release();
    }
    state_ = Idle{};
}

CursorHint Mover::cursor_hint_at(Pt p) const {
    const auto h = hit(p);
    if (!h) {
        return CursorHint::Default;
    }
    if (h->part == HitPart::Node) {
        return entries_[h->entry].contour.node(h->id).cursor;
    }
    return CursorHint::SizeAll;
}

ContourDrawables Mover::contour_drawables(std::size_t index) const {
    check_index(index, entries_.size());
    return drawables(entries_[index].contour);
}

std::vector<ContourDrawables> Mover::all_drawables() const {
    std::vector<ContourDrawables> out;
    out.reserve(entries_.size());
    for (std::size_t k = entries_.size(); k-- > 0;) {
        out.push_back(drawables(entries_[k].contour));
    }
    return out;
}

}  // namespace mg
