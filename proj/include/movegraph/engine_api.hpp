#pragma once

// Message surface for embedding the engine in a front end (the browser demo
// talks to a portable build through this). Requests and replies are JSON
// objects serialized as text:
//
//   {"op":"load","scene":"<scene text>"}        -> {"ok":true} | {"error":...}
//   {"op":"catch","x":X,"y":Y,"button":"L"|"R"} -> {"caught":bool}
//   {"op":"moving","x":X,"y":Y}                 -> {"moved":bool,"caught":bool}
//   {"op":"release"}                            -> {"caught":false}
//   {"op":"cursor","x":X,"y":Y}                 -> {"cursor":"Default"|"Hand"|...}
//   {"op":"drawables"}                          -> {"color":"#RRGGBB","entries":[...]}
//   {"op":"bring_to_top","index":I}             -> {"ok":true}
//   {"op":"save"}                               -> {"scene":"<scene text>"}
//
// A failed load keeps the previous scene. Every other failure is reported as
// {"error": message} without touching state.

#include <optional>
#include <string>
#include <string_view>

#include "movegraph/scene_io.hpp"

namespace mg {

class EngineHost {
public:
    std::string handle(std::string_view request);

    bool loaded() const { return session_.has_value(); }
    const Session* session() const { return session_ ? &*session_ : nullptr; }

private:
    std::optional<Session> session_;
};

const char* cursor_name(CursorHint c);

}  // namespace mg
