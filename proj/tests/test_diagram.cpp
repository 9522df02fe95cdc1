#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quandlekit/diagram.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/io.hpp"

using namespace quandlekit;

namespace {

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LinkDiagram make_trefoil() {
    return LinkDiagram("trefoil", 3,
                       {{1, 1, 0, 2}, {1, 2, 1, 0}, {1, 0, 2, 1}},
                       {{0, {0, 2, 1}}});
}

bool same_events(const std::vector<TraversalEvent>& got,
                 const std::vector<TraversalEvent>& want) {
    if (got.size() != want.size())
        return false;
    for (size_t i = 0; i < got.size(); ++i)
        if (got[i].crossing != want[i].crossing || got[i].from_arc != want[i].from_arc ||
            got[i].to_arc != want[i].to_arc)
            return false;
    return true;
}

} // namespace

TEST_CASE("trefoil diagram structure") {
    LinkDiagram t = make_trefoil();
    CHECK(t.arc_count() == 3);
    CHECK(t.component_count() == 1);
    CHECK(t.writhe() == 3);
    CHECK(t.crossings_under(0) == std::vector<int>{0, 1, 2});
    for (int arc = 0; arc < 3; ++arc) {
        CHECK(t.component_of_arc(arc) == 0);
        CHECK(t.exit_crossing(arc) == arc); // crossing i consumes arc i here
    }
    CHECK(same_events(t.traverse(0), {{0, 0, 2}, {2, 2, 1}, {1, 1, 0}}));
}

TEST_CASE("moving the base arc rotates the traversal") {
    LinkDiagram rotated("trefoil", 3,
                        {{1, 1, 0, 2}, {1, 2, 1, 0}, {1, 0, 2, 1}},
                        {{2, {2, 1, 0}}});
    CHECK(same_events(rotated.traverse(0), {{2, 2, 1}, {1, 1, 0}, {0, 0, 2}}));
}

TEST_CASE("closed loop arcs traverse to nothing") {
    LinkDiagram unknot("unknot", 1, {}, {{0, {0}}});
    CHECK(unknot.traverse(0).empty());
    CHECK(unknot.writhe() == 0);
    CHECK(unknot.exit_crossing(0) == -1);

    LinkDiagram unlink("unlink2", 2, {}, {{0, {0}}, {1, {1}}});
    CHECK(unlink.component_count() == 2);
    CHECK(unlink.component_of_arc(0) == 0);
    CHECK(unlink.component_of_arc(1) == 1);
    CHECK(unlink.crossings_under(1).empty());
}

TEST_CASE("validate_diagram reports each failure mode") {
    std::vector<Crossing> tcr = {{1, 1, 0, 2}, {1, 2, 1, 0}, {1, 0, 2, 1}};
    std::vector<ComponentTrace> tcomp = {{0, {0, 2, 1}}};
    CHECK_FALSE(validate_diagram(3, tcr, tcomp).has_value());

    auto issue = validate_diagram(0, {}, {});
    REQUIRE(issue.has_value());
    CHECK(issue->malformed);

    issue = validate_diagram(3, {{1, 7, 0, 2}}, tcomp);
    REQUIRE(issue.has_value());
    CHECK(issue->malformed);
    CHECK(issue->crossing == 0);

    issue = validate_diagram(3, {{0, 1, 0, 2}}, tcomp);
    REQUIRE(issue.has_value());
    CHECK(issue->malformed); // sign must be +1 or -1

    // Arc 0 used as the incoming under strand twice.
    issue = validate_diagram(2, {{1, 0, 0, 1}, {1, 1, 0, 0}}, {{0, {0, 1}}});
    REQUIRE(issue.has_value());
    CHECK_FALSE(issue->malformed);
    CHECK(issue->crossing == 1);

    // Trace must start at the declared base arc.
    issue = validate_diagram(3, tcr, {{0, {2, 1, 0}}});
    REQUIRE(issue.has_value());
    CHECK_FALSE(issue->malformed);
    CHECK(issue->component == 0);

    // Trace claims 0 -> 1 but crossing 0 continues arc 0 as arc 2.
    issue = validate_diagram(3, tcr, {{0, {0, 1, 2}}});
    REQUIRE(issue.has_value());
    CHECK_FALSE(issue->malformed);

    // An arc with no undercrossing can only be a whole component.
    issue = validate_diagram(2, {}, {{0, {0, 1}}});
    REQUIRE(issue.has_value());
    CHECK_FALSE(issue->malformed);

    issue = validate_diagram(1, {}, {{0, {0}}, {0, {0}}});
    REQUIRE(issue.has_value());
    CHECK_FALSE(issue->malformed); // arc in two components

    issue = validate_diagram(2, {}, {{0, {0}}});
    REQUIRE(issue.has_value());
    CHECK_FALSE(issue->malformed); // arc 1 in no component

    issue = validate_diagram(1, {}, {{0, {}}});
    REQUIRE(issue.has_value());
    CHECK(issue->malformed); // empty trace
}

TEST_CASE("diagram constructor maps issues onto the two error types") {
    CHECK_THROWS_AS(LinkDiagram("bad", 3, {{1, 7, 0, 2}}, {{0, {0, 2, 1}}}), MalformedInput);
    CHECK_THROWS_AS(LinkDiagram("bad", 3, {{1, 1, 0, 2}, {1, 2, 1, 0}, {1, 0, 2, 1}},
                                {{0, {2, 1, 0}}}),
                    ValidationFailure);
}

TEST_CASE("bundled diagram files round trip byte for byte") {
    for (const char* name : {"trefoil.lnk", "trefoil_r1.lnk", "trefoil_r2.lnk", "trefoil_r3.lnk",
                             "fig8.lnk", "k8_18.lnk", "unknot.lnk", "unlink2.lnk",
                             "whitehead.lnk"}) {
        std::string path = data_file(name);
        std::string text = slurp_file(path);
        LinkDiagram d = diagram_from_text(text, path);
        CHECK(diagram_to_text(d) == text);
    }
}

TEST_CASE("bundled trefoil matches the programmatic one") {
    LinkDiagram file = read_diagram_file(data_file("trefoil.lnk"));
    LinkDiagram proc = make_trefoil();
    CHECK(file.arc_count() == proc.arc_count());
    CHECK(file.writhe() == proc.writhe());
    CHECK(same_events(file.traverse(0), proc.traverse(0)));
    CHECK(diagram_to_text(file) == diagram_to_text(proc));
}

TEST_CASE("diagram parse errors carry file line numbers") {
    CHECK_THROWS_WITH_AS(diagram_from_text("", "t.lnk"), "t.lnk: empty input", MalformedInput);
    CHECK_THROWS_WITH_AS(diagram_from_text("knot t\narcs 1\n", "t.lnk"),
                         "t.lnk:1: expected header 'link <name>'", MalformedInput);

    try {
        diagram_from_text("link t\narcs 1\nbogus\n", "t.lnk");
        FAIL("expected MalformedInput");
    } catch (const MalformedInput& e) {
        CHECK(std::string(e.what()).find("t.lnk:3") != std::string::npos);
    }

    // Consistency failures point at the offending crossing's line.
    try {
        diagram_from_text("link t\narcs 2\nx + over=0 in=0 out=1\nx + over=1 in=0 out=0\n"
                          "component base=0 trace=0,1\n",
                          "t.lnk");
        FAIL("expected ValidationFailure");
    } catch (const ValidationFailure& e) {
        std::string what = e.what();
        CHECK(what.find("t.lnk:4") != std::string::npos);
        CHECK(what.find("arc 0 goes under both crossings 0 and 1") != std::string::npos);
    }
}
