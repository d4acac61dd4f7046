#include "movegraph/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "movegraph/scene_io.hpp"

namespace mg::cli {
namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs body and maps exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
}

}  // namespace

int cmd_replay(const std::string& scene_path, const std::string& events_path,
               const std::string& out_path, std::ostream& err) {
    return guarded(err, [&] {
        const Scene scene = load_scene(read_file(scene_path));
        const EventScript script = parse_events(read_file(events_path));
        const std::string text = save_scene(replay(scene, script));
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw InputError("cannot write '" + out_path + "'");
        }
        out << text;
        return kExitOk;
    });
}

int cmd_hit(const std::string& scene_path, Pt p, MouseButton button, std::ostream& out,
            std::ostream& err) {
    return guarded(err, [&] {
        const Session session(load_scene(read_file(scene_path)));
        const auto h = session.mover().probe(p, button);
        if (!h) {
            out << "none\n";
        } else {
            out << "entry=" << h->entry << " kind=" << (h->part == HitPart::Node ? "node" : "connection")
                << " id=" << h->id << '\n';
        }
        return kExitOk;
    });
}

double coverage_fraction(SquareObj::Kind kind, int size) {
    const SquareObj square(Rect{0, 0, size, size}, kind);
    const Contour contour = square.define_contour();
    const int side = size - 1;
    std::vector<int> xs;
    std::vector<int> ys;
    xs.reserve(static_cast<std::size_t>(side) * side);
    ys.reserve(xs.capacity());
    for (int y = 1; y < size; ++y) {
        for (int x = 1; x < size; ++x) {
            xs.push_back(x);
            ys.push_back(y);
        }
    }
    std::vector<unsigned char> hits(xs.size(), 0);
    mark_catchable(contour, xs, ys, hits);
    std::size_t caught = 0;
    for (unsigned char h : hits) {
        caught += h;
    }
    return static_cast<double>(caught) / static_cast<double>(hits.size());
}

int cmd_coverage(SquareObj::Kind kind, int size, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (size < 10) {
            throw InputError("size must be at least 10");
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", coverage_fraction(kind, size));
        out << buf << '\n';
        return kExitOk;
    });
}

int cmd_contours(const std::string& scene_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Session session(load_scene(read_file(scene_path)));
        for (const ContourDrawables& d : session.mover().all_drawables()) {
            for (const Seg& s : d.segments) {
                out << "seg " << s.a.x << ' ' << s.a.y << ' ' << s.b.x << ' ' << s.b.y << '\n';
            }
            for (const Marker& m : d.markers) {
                out << "node " << m.center.x << ' ' << m.center.y << ' '
                    << (m.shape == NodeShape::Circle ? "circle" : "square") << ' ' << m.size << ' '
                    << (m.clearance ? "clear" : "fill") << '\n';
            }
        }
        return kExitOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contour-based move/resize engine tools", "movegraph"};
    app.require_subcommand(1);

    std::string scene_path, events_path, out_path;
    int x = 0, y = 0, size = 0;
    std::string button = "L", kind;

    auto* replay_cmd = app.add_subcommand("replay", "Replay an event script over a scene");
    replay_cmd->add_option("--scene", scene_path, "Scene file")->required();
    replay_cmd->add_option("--events", events_path, "Event script")->required();
    replay_cmd->add_option("--out", out_path, "Output scene file")->required();

    auto* hit_cmd = app.add_subcommand("hit", "Report what a press would catch");
    hit_cmd->add_option("--scene", scene_path, "Scene file")->required();
    hit_cmd->add_option("--x", x, "X coordinate")->required();
    hit_cmd->add_option("--y", y, "Y coordinate")->required();
    hit_cmd->add_option("--button", button, "L or R")->check(CLI::IsMember({"L", "R"}));

    auto* cov_cmd = app.add_subcommand("coverage", "Catchable fraction of a square's interior");
    cov_cmd->add_option("--kind", kind, "square1, square2 or square4")
        ->required()
        ->check(CLI::IsMember({"square1", "square2", "square4"}));
    cov_cmd->add_option("--size", size, "Side in pixels (>= 10)")->required();

    auto* contours_cmd = app.add_subcommand("contours", "Dump contour drawables");
    contours_cmd->add_option("--scene", scene_path, "Scene file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (*replay_cmd) {
        return cmd_replay(scene_path, events_path, out_path, err);
    }
    if (*hit_cmd) {
        return cmd_hit(scene_path, {x, y}, button == "R" ? MouseButton::Right : MouseButton::Left,
                       out, err);
    }
    if (*cov_cmd) {
        const auto k = kind == "square1"   ? SquareObj::Kind::OneNode
                       : kind == "square2" ? SquareObj::Kind::TwoNode
                                           : SquareObj::Kind::FourNode;
        return cmd_coverage(k, size, out, err);
    }
    return cmd_contours(scene_path, out, err);
}

}  // namespace mg::cli
