#include "movegraph/scene_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace mg {

using Json = nlohmann::ordered_json;

namespace {

// -- reading helpers -------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

int read_int(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) {
        fail(path, "expected an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x < -(1LL << 30) || x > (1LL << 30)) {
        fail(path, "integer out of range");
    }
    return static_cast<int>(x);
}

int int_field(const Json& obj, const char* key, const std::string& path) {
    return read_int(field(obj, key, path), path + "." + key);
}

std::string string_field(const Json& obj, const char* key, const std::string& path) {
    const Json& v = field(obj, key, path);
    if (!v.is_string()) {
        fail(path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

std::pair<int, int> read_pair(const Json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) {
        fail(path, "expected [x, y]");
    }
    return {read_int(v[0], path + "[0]"), read_int(v[1], path + "[1]")};
}

Pt pt_field(const Json& obj, const char* key, const std::string& path) {
    const auto [x, y] = read_pair(field(obj, key, path), path + "." + key);
    return {x, y};
}

Rect rect_field(const Json& obj, const char* key, const std::string& path) {
    const Json& r = field(obj, key, path);
    const std::string p = path + "." + key;
    return {int_field(r, "left", p), int_field(r, "top", p), int_field(r, "width", p),
            int_field(r, "height", p)};
}

template <typename Enum, std::size_t N>
Enum enum_field(const Json& obj, const char* key, const std::string& path,
                const std::pair<const char*, Enum> (&names)[N]) {
    const std::string s = string_field(obj, key, path);
    for (const auto& [name, value] : names) {
        if (s == name) {
            return value;
        }
    }
    fail(path + "." + key, "unknown value '" + s + "'");
}

constexpr std::pair<const char*, SquareObj::Kind> kSquareKinds[] = {
    {"TwoNode", SquareObj::Kind::TwoNode},
    {"FourNode", SquareObj::Kind::FourNode},
    {"OneNode", SquareObj::Kind::OneNode},
};
constexpr std::pair<const char*, HScale::Variant> kScaleVariants[] = {
    {"Frame", HScale::Variant::Frame},
    {"MidLine", HScale::Variant::MidLine},
};
constexpr std::pair<const char*, ContourResize> kResizeModes[] = {
    {"None", ContourResize::None},
    {"NS", ContourResize::NS},
    {"WE", ContourResize::WE},
    {"Any", ContourResize::Any},
};

template <typename Enum, std::size_t N>
const char* enum_name(Enum value, const std::pair<const char*, Enum> (&names)[N]) {
    for (const auto& [name, v] : names) {
        if (v == value) {
            return name;
        }
    }
    return "?";
}

Rgb parse_color(const std::string& s, const std::string& path) {
    unsigned r = 0, g = 0, b = 0;
    char tail = 0;
    if (s.size() != 7 || s[0] != '#' ||
        std::sscanf(s.c_str(), "#%2x%2x%2x%c", &r, &g, &b, &tail) != 3) {
        fail(path, "expected a color like #FF0000");
    }
    return {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b)};
}

HouseMinima read_house_minima(const Json& m, const std::string& p) {
    return {int_field(m, "min_width", p), int_field(m, "min_height", p),
            int_field(m, "min_roof_side", p), int_field(m, "min_roof_h", p)};
}

RingMinima read_ring_minima(const Json& m, const std::string& p) {
    return {int_field(m, "min_inner_radius", p), int_field(m, "min_ring_width", p),
            int_field(m, "min_gap", p)};
}

SceneObject read_object(const Json& o, const std::string& path, const SceneConfig& cfg) {
    const std::string kind = string_field(o, "kind", path);
    if (kind == "house") {
        HouseMinima minima = cfg.house_minima.value_or(HouseMinima{});
        if (o.contains("minima")) {
            minima = read_house_minima(o["minima"], path + ".minima");
        }
        return House(int_field(o, "number", path), rect_field(o, "rect", path),
                     pt_field(o, "roof_top", path), minima);
    }
    if (kind == "square") {
        return SquareObj(rect_field(o, "rect", path),
                         enum_field(o, "contour_kind", path, kSquareKinds));
    }
    if (kind == "polygon") {
        return RegularPolygonObj(pt_field(o, "center", path), int_field(o, "radius", path),
                                 int_field(o, "sides", path));
    }
    if (kind == "rings") {
        RingMinima minima = cfg.ring_minima.value_or(RingMinima{});
        if (o.contains("minima")) {
            minima = read_ring_minima(o["minima"], path + ".minima");
        }
        const Json& rs = field(o, "rings", path);
        if (!rs.is_array()) {
            fail(path + ".rings", "expected an array");
        }
        std::vector<Ring> rings;
        for (std::size_t k = 0; k < rs.size(); ++k) {
            const std::string p = path + ".rings[" + std::to_string(k) + "]";
            Ring r;
            r.r_in = int_field(rs[k], "r_in", p);
            r.r_out = int_field(rs[k], "r_out", p);
            r.start_deg = int_field(rs[k], "start_deg", p);
            const Json& vs = field(rs[k], "values", p);
            if (!vs.is_array()) {
                fail(p + ".values", "expected an array");
            }
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (!vs[j].is_number()) {
                    fail(p + ".values[" + std::to_string(j) + "]", "expected a number");
                }
                r.values.push_back(vs[j].get<double>());
            }
            rings.push_back(std::move(r));
        }
        RingTitle title;
        if (o.contains("title")) {
            const Json& t = o["title"];
            title.text = string_field(t, "text", path + ".title");
            const auto [dx, dy] = read_pair(field(t, "offset", path + ".title"), path + ".title.offset");
            title.offset = {dx, dy};
        }
        return RingSet(pt_field(o, "center", path), std::move(rings), std::move(title), minima);
    }
    if (kind == "chatoyant") {
        const Json& ps = field(o, "points", path);
        if (!ps.is_array()) {
            fail(path + ".points", "expected an array");
        }
        ChatoyantPoly poly;
        for (std::size_t k = 0; k < ps.size(); ++k) {
            const auto [x, y] = read_pair(ps[k], path + ".points[" + std::to_string(k) + "]");
            poly.points.push_back({x, y});
        }
        poly.center = pt_field(o, "center", path);
        return poly;
    }
    if (kind == "panel") {
        const Json& b = field(o, "bounds", path);
        const std::string p = path + ".bounds";
        return PanelProxy(rect_field(o, "rect", path), enum_field(o, "resize", path, kResizeModes),
                          {int_field(b, "min_w", p), int_field(b, "max_w", p),
                           int_field(b, "min_h", p), int_field(b, "max_h", p)});
    }
    if (kind == "scale") {
        const Json& b = field(o, "bounds", path);
        const std::string p = path + ".bounds";
        return HScale({int_field(b, "cxL", p), int_field(b, "cxR", p), int_field(b, "cyT", p),
                       int_field(b, "cyB", p)},
                      int_field(o, "shift", path), enum_field(o, "variant", path, kScaleVariants),
                      int_field(o, "min_width", path));
    }
    fail(path + ".kind", "unknown kind '" + kind + "'");
}

// -- writing helpers -------------------------------------------------------

Json pair_json(int a, int b) { return Json::array({a, b}); }
Json pt_json(Pt p) { return pair_json(p.x, p.y); }

Json rect_json(const Rect& r) {
    Json j = Json::object();
    j["left"] = r.left;
    j["top"] = r.top;
    j["width"] = r.width;
    j["height"] = r.height;
    return j;
}

Json house_minima_json(const HouseMinima& m) {
    Json j = Json::object();
    j["min_width"] = m.min_width;
    j["min_height"] = m.min_height;
    j["min_roof_side"] = m.min_roof_side;
    j["min_roof_h"] = m.min_roof_h;
    return j;
}

Json ring_minima_json(const RingMinima& m) {
    Json j = Json::object();
    j["min_inner_radius"] = m.min_inner_radius;
    j["min_ring_width"] = m.min_ring_width;
    j["min_gap"] = m.min_gap;
    return j;
}

struct ObjectWriter {
    Json operator()(const House& h) const {
        Json j = head("house");
        j["number"] = h.number();
        j["rect"] = rect_json(h.rect());
        j["roof_top"] = pt_json(h.roof_top());
        j["minima"] = house_minima_json(h.minima());
        return j;
    }
    Json operator()(const SquareObj& s) const {
        Json j = head("square");
        j["rect"] = rect_json(s.rect());
        j["contour_kind"] = enum_name(s.kind(), kSquareKinds);
        return j;
    }
    Json operator()(const RegularPolygonObj& p) const {
        Json j = head("polygon");
        j["center"] = pt_json(p.center());
        j["radius"] = p.radius();
        j["sides"] = p.sides();
        return j;
    }
    Json operator()(const RingSet& rs) const {
        Json j = head("rings");
        j["center"] = pt_json(rs.center());
        Json rings = Json::array();
        for (const Ring& r : rs.rings()) {
            Json rj = Json::object();
            rj["r_in"] = r.r_in;
            rj["r_out"] = r.r_out;
            rj["start_deg"] = r.start_deg;
            rj["values"] = r.values;
            rings.push_back(std::move(rj));
        }
        j["rings"] = std::move(rings);
        Json t = Json::object();
        t["text"] = rs.title().text;
        t["offset"] = pair_json(rs.title().offset.dx, rs.title().offset.dy);
        j["title"] = std::move(t);
        j["minima"] = ring_minima_json(rs.minima());
        return j;
    }
    Json operator()(const ChatoyantPoly& c) const {
        Json j = head("chatoyant");
        Json pts = Json::array();
        for (Pt p : c.points) {
            pts.push_back(pt_json(p));
        }
        j["points"] = std::move(pts);
        j["center"] = pt_json(c.center);
        return j;
    }
    Json operator()(const PanelProxy& p) const {
        Json j = head("panel");
        j["rect"] = rect_json(p.rect());
        j["resize"] = enum_name(p.resize(), kResizeModes);
        Json b = Json::object();
        b["min_w"] = p.limits().min_w;
        b["max_w"] = p.limits().max_w;
        b["min_h"] = p.limits().min_h;
        b["max_h"] = p.limits().max_h;
        j["bounds"] = std::move(b);
        return j;
    }
    Json operator()(const HScale& s) const {
        Json j = head("scale");
        Json b = Json::object();
        b["cxL"] = s.bounds().cx_left;
        b["cxR"] = s.bounds().cx_right;
        b["cyT"] = s.bounds().cy_top;
        b["cyB"] = s.bounds().cy_bottom;
        j["bounds"] = std::move(b);
        j["shift"] = s.shift();
        j["variant"] = enum_name(s.variant(), kScaleVariants);
        j["min_width"] = s.min_width();
        return j;
    }

    static Json head(const char* kind) {
        Json j = Json::object();
        j["kind"] = kind;
        return j;
    }
};

}  // namespace

const char* kind_name(const SceneObject& object) {
    return std::visit(
        [](const auto& o) -> const char* {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, House>) return "house";
            else if constexpr (std::is_same_v<T, SquareObj>) return "square";
            else if constexpr (std::is_same_v<T, RegularPolygonObj>) return "polygon";
            else if constexpr (std::is_same_v<T, RingSet>) return "rings";
            else if constexpr (std::is_same_v<T, ChatoyantPoly>) return "chatoyant";
            else if constexpr (std::is_same_v<T, PanelProxy>) return "panel";
            else return "scale";
        },
        object);
}

std::string format_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", c.r, c.g, c.b);
    return buf;
}

void validate_scene(const Scene& scene) {
    for (std::size_t k = 0; k < scene.objects.size(); ++k) {
        const auto problem =
            std::visit([](const auto& o) { return o.violation(); }, scene.objects[k]);
        if (problem) {
            throw ValidationError(std::string(kind_name(scene.objects[k])) + "[" +
                                  std::to_string(k) + "]: " + *problem);
        }
    }
    if (scene.config && scene.config->connection_sensitivity &&
        *scene.config->connection_sensitivity < 0) {
        throw ValidationError("config: negative connection sensitivity");
    }
}

Scene load_scene(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!root.is_object()) {
        fail("scene", "expected an object");
    }
    Scene scene;
    SceneConfig cfg;
    if (root.contains("config")) {
        const Json& c = root["config"];
        const std::string p = "config";
        if (!c.is_object()) {
            fail(p, "expected an object");
        }
        if (c.contains("connection_sensitivity")) {
            cfg.connection_sensitivity = int_field(c, "connection_sensitivity", p);
        }
        if (c.contains("contour_color")) {
            cfg.contour_color = parse_color(string_field(c, "contour_color", p), p + ".contour_color");
        }
        if (c.contains("house_minima")) {
            cfg.house_minima = read_house_minima(c["house_minima"], p + ".house_minima");
        }
        if (c.contains("ring_minima")) {
            cfg.ring_minima = read_ring_minima(c["ring_minima"], p + ".ring_minima");
        }
        scene.config = cfg;
    }
    const Json& objs = field(root, "objects", "scene");
    if (!objs.is_array()) {
        fail("objects", "expected an array");
    }
    for (std::size_t k = 0; k < objs.size(); ++k) {
        scene.objects.push_back(read_object(objs[k], "objects[" + std::to_string(k) + "]", cfg));
    }
    validate_scene(scene);
    return scene;
}

std::string save_scene(const Scene& scene) {
    Json root = Json::object();
    if (scene.config) {
        const SceneConfig& c = *scene.config;
        Json cj = Json::object();
        if (c.connection_sensitivity) cj["connection_sensitivity"] = *c.connection_sensitivity;
        if (c.contour_color) cj["contour_color"] = format_color(*c.contour_color);
        if (c.house_minima) cj["house_minima"] = house_minima_json(*c.house_minima);
        if (c.ring_minima) cj["ring_minima"] = ring_minima_json(*c.ring_minima);
        root["config"] = std::move(cj);
    }
    Json objs = Json::array();
    for (const SceneObject& o : scene.objects) {
        objs.push_back(std::visit(ObjectWriter{}, o));
    }
    root["objects"] = std::move(objs);
    return root.dump(2) + "\n";
}

// -- event scripts ---------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
        const std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

int parse_coord(std::string_view tok, std::size_t line_no) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                         std::string(tok) + "'");
    }
    return v;
}

}  // namespace

EventScript parse_events(std::string_view text) {
    EventScript script;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#') {
            continue;
        }
        const auto bad_arity = [&](const char* usage) {
            return ParseError("line " + std::to_string(line_no) + ": expected '" + usage + "'");
        };
        if (tok[0] == "down") {
            if (tok.size() != 4) throw bad_arity("down X Y L|R");
            MouseButton b;
            if (tok[3] == "L") {
                b = MouseButton::Left;
            } else if (tok[3] == "R") {
                b = MouseButton::Right;
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unknown button '" +
                                 std::string(tok[3]) + "'");
            }
            script.events.push_back(
                DownEvent{{parse_coord(tok[1], line_no), parse_coord(tok[2], line_no)}, b});
        } else if (tok[0] == "move") {
            if (tok.size() != 3) throw bad_arity("move X Y");
            script.events.push_back(
                MoveEvent{{parse_coord(tok[1], line_no), parse_coord(tok[2], line_no)}});
        } else if (tok[0] == "up") {
            if (tok.size() != 1) throw bad_arity("up");
            script.events.push_back(UpEvent{});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown event verb '" +
                             std::string(tok[0]) + "'");
        }
    }
    return script;
}

std::string format_events(const EventScript& script) {
    std::ostringstream out;
    for (const Event& e : script.events) {
        if (const auto* d = std::get_if<DownEvent>(&e)) {
            out << "down " << d->at.x << ' ' << d->at.y << ' '
                << (d->button == MouseButton::Left ? 'L' : 'R') << '\n';
        } else if (const auto* m = std::get_if<MoveEvent>(&e)) {
            out << "move " << m->at.x << ' ' << m->at.y << '\n';
        } else {
            out << "up\n";
        }
    }
    return out.str();
}

// -- session ---------------------------------------------------------------

Session::Session(const Scene& scene) : config_(scene.config) {
    if (config_) {
        if (config_->connection_sensitivity) mover_.set_line_sensitivity(*config_->connection_sensitivity);
        if (config_->contour_color) mover_.set_contour_color(*config_->contour_color);
    }
    for (const SceneObject& o : scene.objects) {
        Tracked t = std::visit(
            [](const auto& obj) -> Tracked {
                using T = std::decay_t<decltype(obj)>;
                if constexpr (std::is_same_v<T, House>) return {Kind::House, std::make_shared<T>(obj)};
                else if constexpr (std::is_same_v<T, SquareObj>) return {Kind::Square, std::make_shared<T>(obj)};
                else if constexpr (std::is_same_v<T, RegularPolygonObj>) return {Kind::Polygon, std::make_shared<T>(obj)};
                else if constexpr (std::is_same_v<T, RingSet>) return {Kind::Rings, std::make_shared<T>(obj)};
                else if constexpr (std::is_same_v<T, ChatoyantPoly>) return {Kind::Chatoyant, std::make_shared<Graph>(obj.graph())};
                else if constexpr (std::is_same_v<T, PanelProxy>) return {Kind::Panel, std::make_shared<T>(obj)};
                else return {Kind::Scale, std::make_shared<T>(obj)};
            },
            o);
        mover_.add(t.object);
        tracked_.push_back(std::move(t));
    }
}

bool Session::down(Pt p, MouseButton button) {
    if (mover_.is_caught()) {
        return true;
    }
    if (!mover_.catch_at(p, button)) {
        return false;
    }
    const std::size_t e = *mover_.caught_entry();
    if (button == MouseButton::Right && tracked_[e].kind == Kind::Chatoyant) {
        const auto& g = static_cast<const Graph&>(*tracked_[e].object);
        ChatoyantPoly poly = ChatoyantPoly::from_graph(g);
        if (p != poly.center) {
            rotation_ = Rotation{e, std::move(poly), p};
        }
    }
    return true;
}

bool Session::move(Pt p) {
    const bool result = mover_.moving(p);
    if (rotation_ && p != rotation_->start_poly.center) {
        const ChatoyantPoly turned = chatoyant_rotate(rotation_->start_poly, rotation_->start_mouse, p);
        auto g = std::make_shared<Graph>(turned.graph());
        mover_.replace_entry(rotation_->entry, g);
        tracked_[rotation_->entry].object = std::move(g);
        if (!mover_.is_caught()) {
            rotation_.reset();
        }
        return true;
    }
    return result;
}

void Session::up() {
    mover_.release();
    rotation_.reset();
}

void Session::apply(const Event& e) {
    std::visit(
        [this](const auto& ev) {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, DownEvent>) down(ev.at, ev.button);
            else if constexpr (std::is_same_v<T, MoveEvent>) move(ev.at);
            else up();
        },
        e);
}

void Session::bring_to_top(std::size_t index) {
    if (index >= tracked_.size()) {
        throw std::out_of_range("index out of range");
    }
    if (index == 0) {
        return;
    }
    if (rotation_) {
        up();
    }
    Tracked t = tracked_[index];
    mover_.remove_at(index);
    tracked_.erase(tracked_.begin() + static_cast<std::ptrdiff_t>(index));
    mover_.insert(0, t.object);
    tracked_.insert(tracked_.begin(), std::move(t));
}

Scene Session::scene() const {
    Scene out;
    out.config = config_;
    for (const Tracked& t : tracked_) {
        const MovableObject& o = *t.object;
        switch (t.kind) {
            case Kind::House: out.objects.emplace_back(static_cast<const House&>(o)); break;
            case Kind::Square: out.objects.emplace_back(static_cast<const SquareObj&>(o)); break;
            case Kind::Polygon: out.objects.emplace_back(static_cast<const RegularPolygonObj&>(o)); break;
            case Kind::Rings: out.objects.emplace_back(static_cast<const RingSet&>(o)); break;
            case Kind::Chatoyant:
                out.objects.emplace_back(ChatoyantPoly::from_graph(static_cast<const Graph&>(o)));
                break;
            case Kind::Panel: out.objects.emplace_back(static_cast<const PanelProxy&>(o)); break;
            case Kind::Scale: out.objects.emplace_back(static_cast<const HScale&>(o)); break;
        }
    }
    return out;
}

Scene replay(const Scene& scene, const EventScript& script) {
    Session session(scene);
    for (const Event& e : script.events) {
        session.apply(e);
    }
    return session.scene();
}

}  // namespace mg
