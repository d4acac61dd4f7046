#include "movegraph/scene_io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

namespace mg {
namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(MOVEGRAPH_TEST_DATA) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Scene two_node_square() {
    return Scene{{SquareObj({0, 0, 100, 100}, SquareObj::Kind::TwoNode)}, std::nullopt};
}

TEST(LoadScene, MinimalScene) {
    const Scene s = load_scene(R"({"objects":[]})");
    EXPECT_TRUE(s.objects.empty());
    EXPECT_FALSE(s.config);
}

TEST(LoadScene, ReadsTwoNodeSquare) {
    EXPECT_EQ(load_scene(read_data("two_node_square.json")), two_node_square());
}

TEST(LoadScene, NamesViolatingObject) {
    const char* text = R"({"objects":[{"kind":"house","number":1,
        "rect":{"left":0,"top":0,"width":10,"height":80},"roof_top":[5,-20]}]})";
    try {
        load_scene(text);
        FAIL() << "expected a validation error";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "house[0]: width below minimum");
    }
}

TEST(LoadScene, IndexCountsAllObjects) {
    const char* text = R"({"objects":[
        {"kind":"polygon","center":[0,0],"radius":5,"sides":3},
        {"kind":"square","rect":{"left":0,"top":0,"width":10,"height":12},"contour_kind":"OneNode"}]})";
    try {
        load_scene(text);
        FAIL() << "expected a validation error";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "square[1]: not a square");
    }
}

TEST(LoadScene, ParseErrors) {
    EXPECT_THROW(load_scene("{"), ParseError);
    EXPECT_THROW(load_scene(R"({"objects":{}})"), ParseError);
    EXPECT_THROW(load_scene(R"({"objects":[{"kind":"blob"}]})"), ParseError);
    EXPECT_THROW(load_scene(R"({"objects":[{"kind":"polygon","center":[0,0],"radius":"x","sides":3}]})"),
                 ParseError);
    EXPECT_THROW(load_scene(R"({"objects":[{"kind":"polygon","center":[0,0.5],"radius":5,"sides":3}]})"),
                 ParseError);
    EXPECT_THROW(load_scene(R"({"objects":[{"kind":"square","rect":{"left":0,"top":0,"width":10,"height":10},
        "contour_kind":"Three"}]})"),
                 ParseError);
}

TEST(LoadScene, ParseErrorNamesField) {
    try {
        load_scene(R"({"objects":[{"kind":"polygon","center":[0,0],"sides":3}]})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("radius"), std::string::npos) << e.what();
    }
}

TEST(LoadScene, ConfigMinimaApplyWhenObjectOmitsThem) {
    const char* text = R"({"config":{"house_minima":{"min_width":20,"min_height":20,"min_roof_side":5,"min_roof_h":5}},
        "objects":[{"kind":"house","number":1,"rect":{"left":0,"top":0,"width":25,"height":25},"roof_top":[12,-8]}]})";
    const Scene s = load_scene(text);
    EXPECT_EQ(std::get<House>(s.objects[0]).minima(), (HouseMinima{20, 20, 5, 5}));
}

TEST(SaveScene, RoundTripIsByteIdentical) {
    const Scene s = load_scene(read_data("all_kinds.json"));
    ASSERT_EQ(s.objects.size(), 7u);
    const std::string once = save_scene(s);
    const Scene back = load_scene(once);
    EXPECT_EQ(back, s);
    EXPECT_EQ(save_scene(back), once);
}

TEST(SaveScene, CoversEveryKind) {
    const Scene s = load_scene(read_data("all_kinds.json"));
    std::vector<std::string> kinds;
    for (const SceneObject& o : s.objects) kinds.emplace_back(kind_name(o));
    EXPECT_EQ(kinds, (std::vector<std::string>{"house", "square", "polygon", "rings", "chatoyant",
                                               "panel", "scale"}));
}

TEST(SaveScene, ColorFormat) {
    EXPECT_EQ(format_color({255, 0, 16}), "#FF0010");
}

TEST(Events, ParseAndFormat) {
    const EventScript s = parse_events("# drag\ndown 50 95 L\n\n  move 87 -73\nup\ndown 1 2 R\n");
    const EventScript expected{{DownEvent{{50, 95}, MouseButton::Left}, MoveEvent{{87, -73}}, UpEvent{},
                                DownEvent{{1, 2}, MouseButton::Right}}};
    EXPECT_EQ(s, expected);
    EXPECT_EQ(format_events(s), "down 50 95 L\nmove 87 -73\nup\ndown 1 2 R\n");
    EXPECT_EQ(parse_events(format_events(s)), s);
}

TEST(Events, ErrorsNameTheLine) {
    const auto message = [](const char* text) {
        try {
            parse_events(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message("up\njump 1 2\n").rfind("line 2:", 0), 0u);
    EXPECT_EQ(message("down 1 2 M\n").rfind("line 1:", 0), 0u);
    EXPECT_EQ(message("\n\nmove 1\n").rfind("line 3:", 0), 0u);
    EXPECT_EQ(message("move 1 x\n").rfind("line 1:", 0), 0u);
    EXPECT_EQ(message("Down 1 2 L\n").rfind("line 1:", 0), 0u);
}

TEST(Events, UnmatchedSequencesAreLegal) {
    EXPECT_NO_THROW(parse_events("up\nup\nmove 3 3\n"));
    const Scene s = replay(two_node_square(), parse_events("up\nmove 3 3\nup\n"));
    EXPECT_EQ(s, two_node_square());
}

TEST(Replay, DocumentedScripts) {
    Scene moved = two_node_square();
    std::get<SquareObj>(moved.objects[0]).move({37, -22});
    EXPECT_EQ(replay(two_node_square(), parse_events("down 50 95 L\nmove 87 73\nup\n")), moved);
    EXPECT_EQ(replay(two_node_square(), parse_events("")), two_node_square());
    EXPECT_EQ(replay(two_node_square(), parse_events("down 3 3 L\nmove 100 100\nup\n")),
              two_node_square());
}

TEST(Replay, ReplayIsDeterministicAndStable) {
    const Scene s = load_scene(read_data("all_kinds.json"));
    const EventScript script = parse_events(
        "down 100 180 L\nmove 120 200\nmove 90 140\nup\n"
        "down 540 200 R\nmove 500 150\nup\n"
        "down 700 50 R\nmove 760 110\nup\n"
        "down 253 350 L\nmove 300 350\nup\n");
    const std::string a = save_scene(replay(s, script));
    const std::string b = save_scene(replay(s, script));
    EXPECT_EQ(a, b);
    EXPECT_EQ(save_scene(load_scene(a)), a);
    EXPECT_NE(a, save_scene(s));
}

TEST(Session, ChatoyantRightDragRotates) {
    const ChatoyantPoly poly{{{100, 0}, {0, -100}, {-100, 0}, {0, 100}}, {0, 0}};
    Session session(Scene{{poly}, std::nullopt});
    ASSERT_TRUE(session.down({100, 0}, MouseButton::Right));
    session.move({0, -100});
    EXPECT_TRUE(session.mover().is_caught());
    session.up();
    const auto turned = std::get<ChatoyantPoly>(session.scene().objects[0]);
    EXPECT_EQ(turned.points, (std::vector<Pt>{{0, -100}, {-100, 0}, {0, 100}, {100, 0}}));
    EXPECT_EQ(turned.center, (Pt{0, 0}));
}

TEST(Session, ChatoyantLeftDragMovesOneApex) {
    const ChatoyantPoly poly{{{100, 0}, {0, -100}, {-100, 0}}, {0, 0}};
    Session session(Scene{{poly}, std::nullopt});
    ASSERT_TRUE(session.down({100, 0}, MouseButton::Left));
    session.move({110, 5});
    session.up();
    const auto out = std::get<ChatoyantPoly>(session.scene().objects[0]);
    EXPECT_EQ(out.points[0], (Pt{110, 5}));
    EXPECT_EQ(out.points[1], (Pt{0, -100}));
}

TEST(Session, BringToTopReordersScene) {
    Scene s{{SquareObj({0, 0, 50, 50}, SquareObj::Kind::OneNode),
             SquareObj({0, 0, 60, 60}, SquareObj::Kind::OneNode)},
            std::nullopt};
    Session session(s);
    session.bring_to_top(1);
    const Scene out = session.scene();
    EXPECT_EQ(std::get<SquareObj>(out.objects[0]).rect().width, 60);
    EXPECT_EQ(session.mover().probe({20, 20})->entry, 0u);
    EXPECT_THROW(session.bring_to_top(2), std::out_of_range);
}

TEST(Session, ConfigSensitivityReachesMover) {
    const Scene s = load_scene(read_data("all_kinds.json"));
    EXPECT_EQ(Session(s).mover().line_sensitivity(), 4);
    EXPECT_EQ(Session(two_node_square()).mover().line_sensitivity(), kDefaultConnectionSensitivity);
}

}  // namespace
}  // namespace mg
