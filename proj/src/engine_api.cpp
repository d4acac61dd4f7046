#include "movegraph/engine_api.hpp"

#include <json.hpp>

namespace mg {

using Json = nlohmann::ordered_json;

const char* cursor_name(CursorHint c) {
    switch (c) {
        case CursorHint::Default: return "Default";
        case CursorHint::Hand: return "Hand";
        case CursorHint::SizeAll: return "SizeAll";
        case CursorHint::SizeWE: return "SizeWE";
        case CursorHint::SizeNS: return "SizeNS";
    }
    return "Default";
}

namespace {

Json error(const std::string& what) {
    Json j = Json::object();
    j["error"] = what;
    return j;
}

Pt point_of(const Json& req) {
    if (!req.contains("x") || !req.contains("y") || !req["x"].is_number_integer() ||
        !req["y"].is_number_integer()) {
        throw std::invalid_argument("expected integer x and y");
    }
    return {req["x"].get<int>(), req["y"].get<int>()};
}

Json drawables_json(const Mover& mover) {
    Json entries = Json::array();
    for (const ContourDrawables& d : mover.all_drawables()) {
        Json segs = Json::array();
        for (const Seg& s : d.segments) {
            segs.push_back(Json::array({s.a.x, s.a.y, s.b.x, s.b.y}));
        }
        Json marks = Json::array();
        for (const Marker& m : d.markers) {
            Json mj = Json::object();
            mj["x"] = m.center.x;
            mj["y"] = m.center.y;
            mj["shape"] = m.shape == NodeShape::Circle ? "circle" : "square";
            mj["size"] = m.size;
            mj["clearance"] = m.clearance;
            marks.push_back(std::move(mj));
        }
        Json e = Json::object();
        e["segments"] = std::move(segs);
        e["markers"] = std::move(marks);
        entries.push_back(std::move(e));
    }
    Json out = Json::object();
    out["color"] = format_color(mover.contour_color());
    out["entries"] = std::move(entries);
    return out;
}

}  // namespace

std::string EngineHost::handle(std::string_view request) {
    Json reply;
    try {
        const Json req = Json::parse(request.begin(), request.end());
        const std::string op = req.value("op", "");
        if (op == "load") {
            if (!req.contains("scene") || !req["scene"].is_string()) {
                return error("load needs a scene string").dump();
            }
            Session fresh(load_scene(req["scene"].get<std::string>()));
            session_.emplace(std::move(fresh));
            reply["ok"] = true;
            return reply.dump();
        }
        if (!session_) {
            return error("no scene loaded").dump();
        }
        Session& s = *session_;
        if (op == "catch") {
            const std::string b = req.value("button", "L");
            if (b != "L" && b != "R") {
                return error("button must be L or R").dump();
            }
            reply["caught"] = s.down(point_of(req), b == "R" ? MouseButton::Right : MouseButton::Left);
        } else if (op == "moving") {
            reply["moved"] = s.move(point_of(req));
            reply["caught"] = s.mover().is_caught();
        } else if (op == "release") {
            s.up();
            reply["caught"] = false;
        } else if (op == "cursor") {
            reply["cursor"] = cursor_name(s.mover().cursor_hint_at(point_of(req)));
        } else if (op == "drawables") {
            reply = drawables_json(s.mover());
        } else if (op == "bring_to_top") {
            if (!req.contains("index") || !req["index"].is_number_unsigned()) {
                return error("bring_to_top needs an index").dump();
            }
            s.bring_to_top(req["index"].get<std::size_t>());
            reply["ok"] = true;
        } else if (op == "save") {
            reply["scene"] = save_scene(s.scene());
        } else {
            return error("unknown op '" + op + "'").dump();
        }
    } catch (const std::exception& e) {
        return error(e.what()).dump();
    }
    return reply.dump();
}

}  // namespace mg
