#pragma once

// Scene files (JSON, canonical key order, integer coordinates) and
// line-oriented pointer-event scripts, plus deterministic replay.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "movegraph/chatoyant.hpp"
#include "movegraph/house.hpp"
#include "movegraph/mover.hpp"
#include "movegraph/panel.hpp"
#include "movegraph/polygon.hpp"
#include "movegraph/rings.hpp"
#include "movegraph/scale.hpp"
#include "movegraph/square.hpp"

namespace mg {

/// Malformed text: bad JSON, wrong field types, unknown event verbs.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed text describing an object that breaks its invariants.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using SceneObject =
    std::variant<House, SquareObj, RegularPolygonObj, RingSet, ChatoyantPoly, PanelProxy, HScale>;

/// Kind tag used in scene files: house, square, polygon, rings, chatoyant,
/// panel or scale.
const char* kind_name(const SceneObject& object);

struct SceneConfig {
    std::optional<int> connection_sensitivity;
    std::optional<Rgb> contour_color;
    std::optional<HouseMinima> house_minima;
    std::optional<RingMinima> ring_minima;

    friend bool operator==(const SceneConfig&, const SceneConfig&) = default;
};

/// Objects in Z-order: index 0 is topmost.
struct Scene {
    std::vector<SceneObject> objects;
    std::optional<SceneConfig> config;

    friend bool operator==(const Scene&, const Scene&) = default;
};

Scene load_scene(std::string_view text);
std::string save_scene(const Scene& scene);

/// Throws ValidationError naming the object ("house[0]: width below minimum").
void validate_scene(const Scene& scene);

std::string format_color(Rgb c);

// -- event scripts ---------------------------------------------------------

struct DownEvent {
    Pt at;
    MouseButton button = MouseButton::Left;
    friend bool operator==(const DownEvent&, const DownEvent&) = default;
};
struct MoveEvent {
    Pt at;
    friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};
struct UpEvent {
    friend bool operator==(const UpEvent&, const UpEvent&) = default;
};

using Event = std::variant<DownEvent, MoveEvent, UpEvent>;

struct EventScript {
    std::vector<Event> events;
    friend bool operator==(const EventScript&, const EventScript&) = default;
};

/// Grammar, one event per line: `down X Y L|R`, `move X Y`, `up`. Blank lines
/// and lines starting with '#' are skipped. Errors name the line number.
EventScript parse_events(std::string_view text);
std::string format_events(const EventScript& script);

// -- live session ------------------------------------------------------------

/// A scene wired to a mover. Pointer events go in; the scene comes back out.
///
/// Chatoyant polygons are registered through their graphs. A right press on
/// one of their nodes starts a rotation about the polygon's center: on every
/// move the polygon is rotated from its press-time snapshot and the graph
/// entry is replaced in the mover.
class Session {
public:
    explicit Session(const Scene& scene);

    bool down(Pt p, MouseButton button);
    bool move(Pt p);
    void up();
    void apply(const Event& e);

    /// Moves entry `index` to the top (index 0).
    void bring_to_top(std::size_t index);

    const Mover& mover() const { return mover_; }
    Scene scene() const;

private:
    enum class Kind { House, Square, Polygon, Rings, Chatoyant, Panel, Scale };

    struct Tracked {
        Kind kind;
        std::shared_ptr<MovableObject> object;
    };

    struct Rotation {
        std::size_t entry = 0;
        ChatoyantPoly start_poly;
        Pt start_mouse;
    };

    Mover mover_;
    std::vector<Tracked> tracked_;
    std::optional<SceneConfig> config_;
    std::optional<Rotation> rotation_;
};

/// Feeds the script through a fresh session over the scene. Deterministic.
Scene replay(const Scene& scene, const EventScript& script);

}  // namespace mg
