#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "golden_tables.hpp"
#include "quandlekit/extensions.hpp"
#include "quandlekit/homology.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("boundary formulas") {
    FiniteQuandle r4 = make_dihedral(4);

    Chain1 b = boundary2(r4, 0, 1);
    CHECK(b.terms.at(0) == 1);
    CHECK(b.terms.at(r4.op(0, 1)) == -1);

    CHECK(boundary2(r4, 2, 2).terms.empty()); // degenerate pair

    Chain2 b3 = boundary3(r4, 0, 1, 2);
    Chain2 want;
    want.add(0, 2, 1);
    want.add(r4.op(0, 1), 2, -1);
    want.add(0, 1, -1);
    want.add(r4.op(0, 2), r4.op(1, 2), 1);
    CHECK(b3.terms == want.terms);
    CHECK(boundary3(r4, 1, 1, 3).terms.empty());
    CHECK(boundary3(r4, 1, 3, 3).terms.empty());

    CHECK_THROWS_AS(boundary2(r4, 0, 9), MalformedInput);
    CHECK_THROWS_AS(boundary3(r4, -1, 0, 1), MalformedInput);
}

TEST_CASE("boundary of boundary vanishes") {
    for (const FiniteQuandle& q : {make_dihedral(4), make_dihedral(8), make_trivial(3),
                                   make_alexander(2, {1, 1, 1}), make_alexander(3, {1, 1})}) {
        for (int a = 0; a < q.size(); ++a)
            for (int b = 0; b < q.size(); ++b)
                for (int c = 0; c < q.size(); ++c)
                    CHECK(boundary2(q, boundary3(q, a, b, c)).terms.empty());
    }
}

TEST_CASE("chain parsing and printing") {
    Chain2 c = parse_chain2("2*(0,1) - (3,4) + (0,1)");
    CHECK(c.terms.at({0, 1}) == 3);
    CHECK(c.terms.at({3, 4}) == -1);
    CHECK(chain2_to_string(c) == "3*(0,1) - (3,4)");

    Chain2 canceling = parse_chain2("(2,1) - (2,1)");
    CHECK(canceling.zero());
    CHECK(chain2_to_string(canceling) == "0");

    CHECK(parse_chain2("(5,5)").zero()); // degenerate pairs are zero

    CHECK_THROWS_AS(parse_chain2(""), MalformedInput);
    CHECK_THROWS_AS(parse_chain2("(1,2"), MalformedInput);
    CHECK_THROWS_AS(parse_chain2("(1 2)"), MalformedInput);
    CHECK_THROWS_AS(parse_chain2("(1,2) ("), MalformedInput);
    CHECK_THROWS_AS(parse_chain2("x*(1,2)"), MalformedInput);
}

TEST_CASE("cochain construction rules") {
    AbelianGroup z2({2});
    Eigen::MatrixXi vals = Eigen::MatrixXi::Zero(3, 3);
    vals(0, 1) = 1;
    Cochain2 phi(z2, vals);
    CHECK(phi(0, 1) == 1);
    CHECK(phi.size() == 3);

    vals(1, 1) = 1;
    CHECK_THROWS_AS(Cochain2(z2, vals), ValidationFailure); // diagonal must vanish
    vals(1, 1) = 0;
    vals(2, 0) = 2;
    CHECK_THROWS_AS(Cochain2(z2, vals), MalformedInput); // out of group range

    Cochain2 zero(z2, 3);
    CHECK((phi + zero) == phi);
    CHECK((phi - phi) == zero);
    CHECK_THROWS_AS(phi.set(2, 2, 1), ValidationFailure);
    CHECK_THROWS_AS(phi.set(0, 1, 5), MalformedInput);
}

TEST_CASE("cocycle condition") {
    FiniteQuandle r4 = make_dihedral(4);
    AbelianGroup z2({2});

    CHECK(is_cocycle2(r4, golden::to_cochain(z2, 4, golden::carry22)).ok);
    CHECK(is_cocycle2(r4, golden::to_cochain(z2, 4, golden::chi01_03)).ok);
    CHECK(is_cocycle2(r4, golden::to_cochain(z2, 4, golden::chi10_12)).ok);
    CHECK(is_cocycle2(r4, golden::to_cochain(z2, 4, golden::chi21_23)).ok);

    // A single characteristic function is not a cocycle on R4.
    Cochain2 chi(z2, 4);
    chi.set(0, 1, 1);
    CocycleReport rep = is_cocycle2(r4, chi);
    CHECK_FALSE(rep.ok);
    CHECK(rep.x >= 0);
    CHECK(rep.x < 4);
}

TEST_CASE("coboundaries are cocycles and evaluate to zero on cycles") {
    FiniteQuandle s4 = make_alexander(2, {1, 1, 1});
    AbelianGroup z3({3});
    std::vector<int> f = {1, 0, 2, 2};
    Cochain2 df = coboundary1(s4, z3, f);
    CHECK(is_cocycle2(s4, df).ok);

    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(df(x, y) == (x == y ? 0 : z3.subtract(f[x], f[s4.op(x, y)])));

    // <df, c> = <f, boundary(c)> = 0 whenever c is a cycle.  Build one by
    // chaining (x,y) with (x*y, z) where (x*y)*z = x.
    int x = 0, y = 1;
    int mid = s4.op(x, y);
    int z = -1;
    for (int cand = 0; cand < 4; ++cand)
        if (s4.op(mid, cand) == x)
            z = cand;
    REQUIRE(z >= 0);
    Chain2 cycle;
    cycle.add(x, y, 1);
    cycle.add(mid, z, 1);
    REQUIRE(is_cycle2(s4, cycle));
    CHECK(evaluate(df, cycle) == 0);

    auto witness = is_coboundary(s4, df);
    REQUIRE(witness.has_value());
    CHECK(coboundary1(s4, z3, *witness) == df);
}

TEST_CASE("evaluation pairs chains with cochains linearly") {
    FiniteQuandle r4 = make_dihedral(4);
    AbelianGroup z2({2});
    Cochain2 carry = golden::to_cochain(z2, 4, golden::carry22);

    Chain2 c;
    c.add(0, 1, 1);
    c.add(2, 3, 1); // 2*3 = 0 closes the boundary of (0,1)
    REQUIRE(is_cycle2(r4, c));
    CHECK(evaluate(carry, c) == 1);

    Chain2 doubled;
    doubled.add(0, 1, 2);
    doubled.add(2, 3, 2);
    CHECK(evaluate(carry, doubled) == 0); // 2 * 1 = 0 in Z2

    Chain2 out_of_range;
    out_of_range.add(0, 9, 1);
    CHECK_THROWS_AS(evaluate(carry, out_of_range), MalformedInput);
}

TEST_CASE("coboundary recognition over cyclic and composite groups") {
    FiniteQuandle r4 = make_dihedral(4);
    AbelianGroup z2({2});

    Cochain2 zero(z2, 4);
    auto w0 = is_coboundary(r4, zero);
    REQUIRE(w0.has_value());
    CHECK(coboundary1(r4, z2, *w0) == zero);

    CHECK_FALSE(is_coboundary(r4, golden::to_cochain(z2, 4, golden::carry22)).has_value());

    AbelianGroup z6({2, 3});
    std::vector<int> f = {5, 0, 3, 1};
    Cochain2 df = coboundary1(r4, z6, f);
    auto w = is_coboundary(r4, df);
    REQUIRE(w.has_value());
    CHECK(coboundary1(r4, z6, *w) == df);

    CHECK(cohomologous(r4, golden::to_cochain(z2, 4, golden::carry22),
                       golden::to_cochain(z2, 4, golden::carry22) + coboundary1(r4, z2, {1, 0, 1, 0})));
    CHECK_FALSE(cohomologous(r4, golden::to_cochain(z2, 4, golden::carry22), Cochain2(z2, 4)));
}

TEST_CASE("second cohomology of R4 with Z2 coefficients") {
    FiniteQuandle r4 = make_dihedral(4);
    H2Result h = compute_h2(r4, 2);
    CHECK(h.orders == std::vector<long long>{2, 2, 2, 2});
    CHECK(h.group_order() == 16);
    CHECK(h.group_string() == "Z2 x Z2 x Z2 x Z2");
    REQUIRE(h.representatives.size() == 4);
    for (const Cochain2& rep : h.representatives) {
        CHECK(is_cocycle2(r4, rep).ok);
        CHECK_FALSE(is_coboundary(r4, rep).has_value());
    }
    for (size_t i = 0; i < h.representatives.size(); ++i)
        for (size_t j = i + 1; j < h.representatives.size(); ++j)
            CHECK_FALSE(cohomologous(r4, h.representatives[i], h.representatives[j]));

    // Deterministic: a second run returns identical representatives.
    H2Result again = compute_h2(r4, 2);
    for (size_t i = 0; i < h.representatives.size(); ++i)
        CHECK(h.representatives[i] == again.representatives[i]);
}

TEST_CASE("second cohomology respects the known trivial case") {
    // The trivial quandle fixes every pair, so every cochain is a cocycle and
    // only the zero cochain is a coboundary.
    FiniteQuandle t2 = make_trivial(2);
    H2Result h = compute_h2(t2, 2);
    CHECK(h.group_order() == 4); // two free off-diagonal pairs, nothing killed
    for (const Cochain2& rep : h.representatives)
        CHECK(is_cocycle2(t2, rep).ok);
}

TEST_CASE("bundled cocycle files parse, validate and round trip byte for byte") {
    FiniteQuandle s4 = quandle_from_text(slurp_file(data_file("s4.qnd")));
    std::string cj_text = slurp_file(data_file("cjkls.coc"));
    Cochain2 cj = cochain_from_text(cj_text, s4);
    CHECK(is_cocycle2(s4, cj).ok);
    CHECK(cochain_to_text(cj, "S4") == cj_text);

    FiniteQuandle r8 = quandle_from_text(slurp_file(data_file("r8.qnd")));
    std::string db_text = slurp_file(data_file("doubling8.coc"));
    Cochain2 db = cochain_from_text(db_text, r8);
    CHECK(is_cocycle2(r8, db).ok);
    CHECK(cochain_to_text(db, "R8") == db_text);
}

TEST_CASE("cochain file binding and error reporting") {
    FiniteQuandle r4 = make_dihedral(4);
    CHECK_THROWS_AS(cochain_from_text("cocycle R5 Z2\n0 1 1\n", r4), ValidationFailure);
    CHECK_NOTHROW(cochain_from_text("cocycle R5 Z2\n0 1 1\n", r4, false));
    CHECK_THROWS_AS(cochain_from_text("cocycle R4 Z2\n0 9 1\n", r4), MalformedInput);
    CHECK_THROWS_AS(cochain_from_text("cocycle R4 Z2\n1 1 1\n", r4), ValidationFailure);
    CHECK_THROWS_AS(cochain_from_text("cocycle R4 Z2\n0 1 1\n0 1 1\n", r4), MalformedInput);
    try {
        cochain_from_text("cocycle R4 Z2\n0 1 1\n0 2 9\n", r4, true, "phi.coc");
    } catch (const MalformedInput& e) {
        CHECK(std::string(e.what()).find("phi.coc:3") != std::string::npos);
    }
}
