#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "golden_tables.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/extensions.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

FiniteQuandle s4_quandle() { return read_quandle_file(data_file("s4.qnd")); }

Cochain2 cjkls_cocycle(const FiniteQuandle& s4) {
    return read_cochain_file(data_file("cjkls.coc"), s4);
}

} // namespace

TEST_CASE("coloring counts over dihedral quandles") {
    FiniteQuandle r3 = make_dihedral(3);
    CHECK(count_colorings(read_diagram_file(data_file("trefoil.lnk")), r3) == 9);
    CHECK(count_colorings(read_diagram_file(data_file("fig8.lnk")), r3) == 3);
    CHECK(count_colorings(read_diagram_file(data_file("fig8.lnk")), make_dihedral(5)) == 25);
    CHECK(count_colorings(read_diagram_file(data_file("whitehead.lnk")), r3) == 3);
    CHECK(count_colorings(read_diagram_file(data_file("k8_18.lnk")), r3) == 27);
    CHECK(count_colorings(read_diagram_file(data_file("whitehead.lnk")), make_dihedral(8)) == 64);
}

TEST_CASE("every quandle colors the unknot by constants") {
    LinkDiagram unknot = read_diagram_file(data_file("unknot.lnk"));
    LinkDiagram unlink = read_diagram_file(data_file("unlink2.lnk"));
    for (int n : {2, 3, 5}) {
        FiniteQuandle q = make_dihedral(n);
        CHECK(count_colorings(unknot, q) == n);
        CHECK(count_colorings(unlink, q) == static_cast<long long>(n) * n);
    }
}

TEST_CASE("enumerate_colorings returns sorted valid colorings") {
    LinkDiagram trefoil = read_diagram_file(data_file("trefoil.lnk"));
    FiniteQuandle s4 = s4_quandle();
    std::vector<Coloring> all = enumerate_colorings(trefoil, s4);
    CHECK(static_cast<long long>(all.size()) == count_colorings(trefoil, s4));
    CHECK(all.size() == 16);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const Coloring& c : all)
        CHECK(is_coloring(trefoil, s4, c));

    // Constant colorings always work; a non-constant invalid one is rejected.
    for (int v = 0; v < 4; ++v)
        CHECK(is_coloring(trefoil, s4, Coloring{{v, v, v}}));
    bool found_invalid = false;
    Coloring probe{{0, 1, 2}};
    if (!is_coloring(trefoil, s4, probe))
        found_invalid = true;
    CHECK(found_invalid == (std::find(all.begin(), all.end(), probe) == all.end()));
}

TEST_CASE("holonomy vanishes on constant colorings") {
    LinkDiagram trefoil = read_diagram_file(data_file("trefoil.lnk"));
    FiniteQuandle s4 = s4_quandle();
    Cochain2 phi = cjkls_cocycle(s4);
    for (int v = 0; v < 4; ++v) {
        Coloring c{{v, v, v}};
        CHECK(holonomy(trefoil, s4, phi, c, 0) == 0); // phi(v, v) = 0 three times
        CHECK(holonomies(trefoil, s4, phi, c) == std::vector<int>{0});
    }

    int zero_total = 0;
    for (const Coloring& c : enumerate_colorings(trefoil, s4))
        if (holonomy(trefoil, s4, phi, c, 0) == 0)
            ++zero_total;
    CHECK(zero_total == 4); // exactly the constants survive on the trefoil

    CHECK_THROWS_AS(holonomy(trefoil, s4, phi, Coloring{{0, 1, 2}}, 0), ValidationFailure);
}

TEST_CASE("whitehead link holonomies split the colorings in half") {
    LinkDiagram wh = read_diagram_file(data_file("whitehead.lnk"));
    FiniteQuandle r8 = make_dihedral(8);
    Cochain2 phi = read_cochain_file(data_file("doubling8.coc"), r8);
    int all_zero = 0;
    for (const Coloring& c : enumerate_colorings(wh, r8)) {
        std::vector<int> h = holonomies(wh, r8, phi, c);
        REQUIRE(h.size() == 2);
        if (h[0] == 0 && h[1] == 0)
            ++all_zero;
    }
    CHECK(all_zero == 32);
}

TEST_CASE("lift_coloring succeeds exactly when all holonomies vanish") {
    FiniteQuandle s4 = s4_quandle();
    Cochain2 phi = cjkls_cocycle(s4);
    AbelianExtension ext = build_extension(s4, phi);

    LinkDiagram fig8 = read_diagram_file(data_file("fig8.lnk"));
    for (const Coloring& c : enumerate_colorings(fig8, s4)) {
        LiftOutcome lift = lift_coloring(fig8, ext, c);
        std::vector<int> h = holonomies(fig8, s4, phi, c);
        CHECK(lift.component_holonomy == h);
        bool zero = std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
        CHECK(lift.ok == zero);
        if (lift.ok) {
            CHECK(is_coloring(fig8, ext.total, lift.lifted));
            // The lift sits over the base coloring.
            for (size_t arc = 0; arc < lift.lifted.colors.size(); ++arc)
                CHECK(ext.fiber_coords(lift.lifted.colors[arc]).second == c.colors[arc]);
        } else {
            CHECK(lift.lifted.colors.empty());
        }
    }
}

TEST_CASE("fiber choices shift lifts within a fiber") {
    FiniteQuandle s4 = s4_quandle();
    Cochain2 phi = cjkls_cocycle(s4);
    AbelianExtension ext = build_extension(s4, phi);
    LinkDiagram trefoil = read_diagram_file(data_file("trefoil.lnk"));

    Coloring c{{2, 2, 2}};
    LiftOutcome base = lift_coloring(trefoil, ext, c);
    REQUIRE(base.ok);
    CHECK(ext.fiber_coords(base.lifted.colors[0]).first == 0);

    LiftOutcome shifted = lift_coloring(trefoil, ext, c, {1});
    REQUIRE(shifted.ok);
    CHECK(is_coloring(trefoil, ext.total, shifted.lifted));
    CHECK(ext.fiber_coords(shifted.lifted.colors[0]).first == 1);
    CHECK(shifted.lifted.colors != base.lifted.colors);

    CHECK_THROWS_AS(lift_coloring(trefoil, ext, c, {0, 1}), MalformedInput);
    CHECK_THROWS_AS(lift_coloring(trefoil, ext, c, {5}), MalformedInput);
    CHECK_THROWS_AS(lift_coloring(trefoil, ext, Coloring{{0, 1}}, {}), ValidationFailure);
}
