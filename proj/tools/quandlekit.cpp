// Command line front end: builds and verifies quandles, checks cocycles,
// forms abelian extensions, colors link diagrams and evaluates the cocycle
// state-sum invariant.  Exit codes: 0 success, 1 a mathematical property
// failed to hold, 2 malformed input, 3 internal error.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "golden_tables.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/extensions.hpp"
#include "quandlekit/homology.hpp"
#include "quandlekit/invariants.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw MalformedInput("cannot open '" + path + "' for writing");
    out << text;
}

int to_int(const std::string& token, const std::string& what) {
    int value = 0;
    const char* end = token.data() + token.size();
    auto [p, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || p != end)
        throw MalformedInput(what + ": expected an integer, got '" + token + "'");
    return value;
}

std::vector<int> to_int_list(const std::string& csv, const std::string& what) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ','))
        out.push_back(to_int(token, what));
    if (out.empty())
        throw MalformedInput(what + ": empty list");
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

// Reads a cochain bound to q.  Unless no_verify, the name binding and the
// cocycle condition are both enforced.
Cochain2 load_cochain(const std::string& path, const FiniteQuandle& q, bool no_verify) {
    Cochain2 phi = read_cochain_file(path, q, !no_verify);
    if (!no_verify) {
        CocycleReport rep = is_cocycle2(q, phi);
        if (!rep.ok) {
            std::ostringstream msg;
            msg << path << ": not a cocycle: condition fails at (x, y, z) = (" << rep.x << ", "
                << rep.y << ", " << rep.z << ")";
            throw ValidationFailure(msg.str());
        }
    }
    return phi;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// paper-suite: every worked example the library is calibrated against, as
// named pass/fail checks.  A check returns "" on success, a short reason
// otherwise; thrown exceptions count as failures with their message.

struct Suite {
    int passed = 0;
    int failed = 0;

    void run(const std::string& name, const std::function<std::string()>& check) {
        std::string detail;
        try {
            detail = check();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (detail.empty()) {
            std::cout << "PASS " << name << "\n";
            ++passed;
        } else {
            std::cout << "FAIL " << name << ": " << detail << "\n";
            ++failed;
        }
    }
};

int run_paper_suite(const std::string& data_override) {
    const std::string dir = data_override.empty() ? data_dir() : data_override;
    auto df = [&](const char* name) { return dir + "/" + name; };
    const AbelianGroup z2({2});
    Suite suite;

    suite.run("carry-cocycle-tables", [&]() -> std::string {
        BasedCocycle c22 = modular_carry_cocycle(2, 2);
        if (!(c22.quandle == make_dihedral(4)))
            return "base of the (2,2) carry cocycle is not R4";
        if (!golden::matches(c22.cocycle, golden::carry22))
            return "(2,2) table differs from the pinned 8 entries";
        BasedCocycle c31 = modular_carry_cocycle(3, 1);
        if (!(c31.quandle == make_trivial(3)))
            return "base of the (3,1) carry cocycle is not T3";
        if (!golden::matches(c31.cocycle, golden::carry31))
            return "(3,1) table differs from the pinned 6 entries";
        if (!golden::matches(modular_carry_cocycle(3, 2).cocycle, golden::carry32))
            return "(3,2) table differs from the pinned 54 entries";
        return "";
    });

    suite.run("digit-cocycle-table", [&]() -> std::string {
        BasedCocycle d22 = polynomial_digit_cocycle(2, 2);
        if (!(d22.quandle == make_dihedral(4)))
            return "base of the (2,2) digit cocycle is not the R4 table";
        if (!golden::matches(d22.cocycle, golden::digit22))
            return "(2,2) table differs from the pinned 8 entries";
        return "";
    });

    suite.run("digit-carry-difference", [&]() -> std::string {
        FiniteQuandle r4 = make_dihedral(4);
        Cochain2 carry = golden::to_cochain(z2, 4, golden::carry22);
        Cochain2 corr0 = golden::to_cochain(z2, 4, golden::chi21_23);
        Cochain2 corr1 = golden::to_cochain(z2, 4, golden::chi10_12);
        if (!is_cocycle2(r4, corr0).ok || !is_cocycle2(r4, corr1).ok)
            return "a correction term is not a cocycle";
        if (!golden::matches(carry + corr0 + corr1, golden::digit22))
            return "digit cocycle differs from carry + corrections";
        return "";
    });

    suite.run("carry-extension-is-r8", [&]() -> std::string {
        BasedCocycle c22 = modular_carry_cocycle(2, 2);
        AbelianExtension e = build_extension(c22.quandle, c22.cocycle);
        if (!find_isomorphism(e.total, make_dihedral(8)))
            return "extension is not isomorphic to R8";
        return "";
    });

    suite.run("digit-extension-is-cubic", [&]() -> std::string {
        BasedCocycle d22 = polynomial_digit_cocycle(2, 2);
        AbelianExtension e = build_extension(d22.quandle, d22.cocycle);
        if (!find_isomorphism(e.total, polynomial_digit_cocycle(2, 3).quandle))
            return "extension is not the cubic quandle";
        if (find_isomorphism(e.total, make_dihedral(8)))
            return "extension is unexpectedly isomorphic to R8";
        return "";
    });

    suite.run("carry-cycle-pairings", [&]() -> std::string {
        for (auto [q, m] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
            BasedCocycle bc = modular_carry_cocycle(q, m);
            long long qm = ipow(q, m);
            Chain2 c;
            c.add(0, 1, 1);
            c.add(static_cast<int>(q % qm), static_cast<int>((ipow(q, m - 1) + q - 1) % qm), 1);
            std::string tag = "(" + std::to_string(q) + "," + std::to_string(m) + ")";
            if (!is_cycle2(bc.quandle, c))
                return tag + " witness chain is not a cycle";
            if (evaluate(bc.cocycle, c) != 1)
                return tag + " pairing is not 1";
            if (is_trivial_extension(build_extension(bc.quandle, bc.cocycle)))
                return tag + " carry cocycle is a coboundary";
        }
        return "";
    });

    suite.run("digit-cycle-pairings", [&]() -> std::string {
        for (auto [q, m] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
            BasedCocycle bc = polynomial_digit_cocycle(q, m);
            auto enc = [&, mm = m, qq = q](const std::vector<int>& dig) {
                long long i = 0;
                for (int j = mm - 1; j >= 0; --j)
                    i = i * qq + dig[j];
                return static_cast<int>(i);
            };
            std::vector<int> unit(m, 0); // digits of (1 - T); zero at level one
            if (m >= 2)
                unit[1] = 1;
            std::vector<int> second(m, 0); // (1-T)^{m-1} + (1-T) - 1
            second[0] = (q - 1) % q;
            if (m >= 2)
                second[1] = (second[1] + 1) % q;
            second[m - 1] = (second[m - 1] + 1) % q;
            Chain2 c;
            c.add(0, 1, 1);
            c.add(enc(unit), enc(second), 1);
            std::string tag = "(" + std::to_string(q) + "," + std::to_string(m) + ")";
            if (!is_cycle2(bc.quandle, c))
                return tag + " witness chain is not a cycle";
            if (evaluate(bc.cocycle, c) != 1)
                return tag + " pairing is not 1";
            if (is_trivial_extension(build_extension(bc.quandle, bc.cocycle)))
                return tag + " digit cocycle is a coboundary";
        }
        return "";
    });

    suite.run("cocycle-pairing-matrix", [&]() -> std::string {
        const int expect[3][3] = {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
        FiniteQuandle r4 = make_dihedral(4);
        Cochain2 a4 = golden::to_cochain(z2, 4, golden::chi01_03);
        Cochain2 b4 = golden::to_cochain(z2, 4, golden::chi10_12);
        for (int n = 1; n <= 3; ++n) {
            int big = 4 * n;
            FiniteQuandle r = make_dihedral(big);
            std::vector<int> reduction(big);
            for (int u = 0; u < big; ++u)
                reduction[u] = u % 4;
            QuandleMap p = make_quandle_map(r, r4, reduction);
            Cochain2 pa = pullback_cocycle(p, a4);
            Cochain2 pb = pullback_cocycle(p, b4);
            Cochain2 ph = dihedral_doubling_cocycle(2 * n).cocycle;
            if (!is_cocycle2(r, pa).ok || !is_cocycle2(r, pb).ok)
                return "a pulled back cochain is not a cocycle";
            Chain2 c01, c10, c01p;
            c01.add(0, 1, 1);
            c01.add(2, 1, 1);
            c10.add(1, 0, 1);
            c10.add(big - 1, 0, 1);
            c01p.add(0, 1, 1);
            c01p.add(2, (2 * n + 1) % big, 1);
            const Chain2* chains[3] = {&c01, &c10, &c01p};
            const Cochain2* cochains[3] = {&pa, &pb, &ph};
            for (const Chain2* c : chains)
                if (!is_cycle2(r, *c))
                    return "witness chain is not a cycle at n=" + std::to_string(n);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (evaluate(*cochains[i], *chains[j]) != expect[i][j])
                        return "pairing matrix mismatch at n=" + std::to_string(n);
        }
        return "";
    });

    suite.run("second-cohomology-rank", [&]() -> std::string {
        FiniteQuandle r4 = make_dihedral(4);
        H2Result h = compute_h2(r4, 2);
        if (h.orders.size() < 3)
            return "rank below 3, found " + h.group_string();
        for (long long d : h.orders)
            if (d != 2)
                return "unexpected invariant factor " + std::to_string(d);
        for (const Cochain2& rep : h.representatives) {
            if (!is_cocycle2(r4, rep).ok)
                return "a generator fails the cocycle condition";
            if (is_coboundary(r4, rep))
                return "a generator is a coboundary";
        }
        return "";
    });

    suite.run("dihedral-splitting", [&]() -> std::string {
        DihedralSplitting s6 = crt_decompose_dihedral(6);
        if (s6.moduli != std::vector<long long>{2, 3})
            return "R6 does not split as R2 x R3";
        DihedralSplitting s12 = crt_decompose_dihedral(12);
        if (s12.moduli != std::vector<long long>{4, 3})
            return "R12 does not split as R4 x R3";
        if (!find_isomorphism(make_dihedral(6), make_product(make_dihedral(2), make_dihedral(3))))
            return "no isomorphism R6 -> R2 x R3";
        return "";
    });

    suite.run("dihedral-as-alexander", [&]() -> std::string {
        if (!(make_alexander(4, {1, 1}) == make_dihedral(4)))
            return "modulus 4, h = 1 + T differs from the R4 table";
        if (!(make_alexander(8, {1, 1}) == make_dihedral(8)))
            return "modulus 8, h = 1 + T differs from the R8 table";
        FiniteQuandle a4 = make_alexander(2, {1, 0, 1}); // (1 - T)^2 over Z2
        if (!is_homomorphism(a4, make_dihedral(4), {0, 1, 3, 2}))
            return "pinned identification with R4 is not a homomorphism";
        if (!find_isomorphism(a4, make_dihedral(4)))
            return "no isomorphism with R4";
        return "";
    });

    suite.run("trefoil-state-sum", [&]() -> std::string {
        FiniteQuandle s4 = read_quandle_file(df("s4.qnd"));
        Cochain2 phi = read_cochain_file(df("cjkls.coc"), s4);
        GroupRingValue v = state_sum(read_diagram_file(df("trefoil.lnk")), s4, phi);
        if (v.str() != "4 + 12t")
            return "got " + v.str();
        return "";
    });

    suite.run("figure-eight-state-sum", [&]() -> std::string {
        FiniteQuandle s4 = read_quandle_file(df("s4.qnd"));
        Cochain2 phi = read_cochain_file(df("cjkls.coc"), s4);
        GroupRingValue v = state_sum(read_diagram_file(df("fig8.lnk")), s4, phi);
        if (v.str() != "4 + 12t")
            return "got " + v.str();
        return "";
    });

    suite.run("eight-eighteen-state-sum", [&]() -> std::string {
        FiniteQuandle s4 = read_quandle_file(df("s4.qnd"));
        Cochain2 phi = read_cochain_file(df("cjkls.coc"), s4);
        GroupRingValue v = state_sum(read_diagram_file(df("k8_18.lnk")), s4, phi);
        if (v.str() != "16 + 48t")
            return "got " + v.str();
        return "";
    });

    suite.run("trefoil-obstruction", [&]() -> std::string {
        FiniteQuandle s4 = read_quandle_file(df("s4.qnd"));
        Cochain2 phi = read_cochain_file(df("cjkls.coc"), s4);
        ObstructionReport rep = obstruction_report(read_diagram_file(df("trefoil.lnk")), s4, phi);
        if (rep.coloring_count != 16 || rep.extendable_count != 4)
            return "expected 16 colorings with 4 extendable, got " +
                   std::to_string(rep.coloring_count) + " with " +
                   std::to_string(rep.extendable_count);
        for (size_t i = 0; i < rep.colorings.size(); ++i) {
            const std::vector<int>& c = rep.colorings[i].colors;
            bool constant = std::all_of(c.begin(), c.end(), [&](int v) { return v == c[0]; });
            bool extends = std::all_of(rep.holonomy_table[i].begin(), rep.holonomy_table[i].end(),
                                       [](int h) { return h == 0; });
            if (constant != extends)
                return "extendable colorings are not exactly the constant ones";
        }
        return "";
    });

    suite.run("whitehead-split", [&]() -> std::string {
        FiniteQuandle r8 = read_quandle_file(df("r8.qnd"));
        Cochain2 phi = read_cochain_file(df("doubling8.coc"), r8);
        LinkDiagram d = read_diagram_file(df("whitehead.lnk"));
        ObstructionReport rep = obstruction_report(d, r8, phi);
        if (rep.coloring_count != 64 || rep.extendable_count != 32)
            return "expected 64 colorings with 32 extendable";
        if (rep.total.str() != "64")
            return "total state-sum is " + rep.total.str();
        if (rep.per_component.size() != 2 || rep.per_component[0].str() != "32 + 32t" ||
            rep.per_component[1].str() != "32 + 32t")
            return "per-component values differ from (32 + 32t, 32 + 32t)";
        int base0 = d.components()[0].base;
        int base1 = d.components()[1].base;
        std::set<std::pair<int, int>> tops;
        for (size_t i = 0; i < rep.colorings.size(); ++i) {
            const std::vector<int>& c = rep.colorings[i].colors;
            tops.insert({c[base0], c[base1]});
            bool extends = std::all_of(rep.holonomy_table[i].begin(), rep.holonomy_table[i].end(),
                                       [](int h) { return h == 0; });
            if (extends != (c[base0] % 2 == c[base1] % 2))
                return "extendability differs from the equal-parity criterion";
            if (!extends && rep.holonomy_table[i] != std::vector<int>{1, 1})
                return "an obstructed coloring does not carry t on both components";
        }
        if (tops.size() != 64)
            return "colorings are not determined by the two base arc colors";
        return "";
    });

    suite.run("doubling-shift-flip", [&]() -> std::string {
        BasedCocycle d8 = dihedral_doubling_cocycle(4); // on R8, extension R16
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                if (d8.cocycle(a, (b + 4) % 8) == d8.cocycle(a, b))
                    return "shifting the second argument by 4 does not flip the value";
        AbelianExtension e = build_extension(d8.quandle, d8.cocycle);
        if (!find_isomorphism(e.total, make_dihedral(16)))
            return "extension is not isomorphic to R16";
        return "";
    });

    suite.run("doubling-tower", [&]() -> std::string {
        BasedCocycle d12 = dihedral_doubling_cocycle(6); // on R12, extension R24
        AbelianExtension e = build_extension(d12.quandle, d12.cocycle);
        if (!find_isomorphism(e.total, make_dihedral(24)))
            return "extension of R12 is not isomorphic to R24";
        return "";
    });

    suite.run("bundled-cocycle-files", [&]() -> std::string {
        FiniteQuandle s4 = read_quandle_file(df("s4.qnd"));
        Cochain2 cjkls = read_cochain_file(df("cjkls.coc"), s4);
        if (!is_cocycle2(s4, cjkls).ok)
            return "bundled cocycle on S4 fails the cocycle condition";
        FiniteQuandle r8 = read_quandle_file(df("r8.qnd"));
        Cochain2 dbl = read_cochain_file(df("doubling8.coc"), r8);
        if (!(dbl == dihedral_doubling_cocycle(4).cocycle))
            return "bundled doubling cocycle differs from the computed one";
        return "";
    });

    std::cout << suite.passed << " of " << suite.passed + suite.failed << " checks passed\n";
    return suite.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quandles, 2-cocycles, abelian extensions and state-sum invariants"};
    app.require_subcommand(1);
    int soft_rc = 0; // set for negative results that are not input errors

    // ---- quandle ----------------------------------------------------------
    auto* quandle_cmd = app.add_subcommand("quandle", "build, verify and compare quandles");
    quandle_cmd->require_subcommand(1);

    struct {
        std::string kind;
        std::vector<std::string> args;
        std::string output, name;
    } mk;
    auto* mk_cmd = quandle_cmd->add_subcommand("make", "write a standard quandle as a table file");
    mk_cmd->add_option("kind", mk.kind, "trivial | dihedral | alexander | conjugation | product")
        ->required()
        ->check(CLI::IsMember({"trivial", "dihedral", "alexander", "conjugation", "product"}));
    mk_cmd->add_option("args", mk.args,
                       "trivial <n> | dihedral <n> | alexander <modulus> <c0,c1,...> | "
                       "conjugation <group-file> <n> | product <x-file> <y-file>");
    mk_cmd->add_option("-o,--output", mk.output, "write here instead of stdout");
    mk_cmd->add_option("--name", mk.name, "override the quandle name");
    mk_cmd->callback([&] {
        const std::vector<std::string>& a = mk.args;
        auto need = [&](size_t n, const char* usage) {
            if (a.size() != n)
                throw MalformedInput("quandle make " + mk.kind + " expects " + usage);
        };
        FiniteQuandle q = [&]() -> FiniteQuandle {
            if (mk.kind == "trivial") {
                need(1, "<n>");
                return make_trivial(to_int(a[0], "n"));
            }
            if (mk.kind == "dihedral") {
                need(1, "<n>");
                return make_dihedral(to_int(a[0], "n"));
            }
            if (mk.kind == "alexander") {
                need(2, "<modulus> <c0,c1,...>");
                return make_alexander(to_int(a[0], "modulus"),
                                      to_int_list(a[1], "coefficients"));
            }
            if (mk.kind == "conjugation") {
                need(2, "<group-file> <n>");
                auto [gname, table] = read_group_file(a[0]);
                return make_conjugation(table, to_int(a[1], "n"), gname);
            }
            need(2, "<x-file> <y-file>");
            return make_product(read_quandle_file(a[0]), read_quandle_file(a[1]));
        }();
        if (!mk.name.empty())
            q.relabel(mk.name);
        emit(mk.output, quandle_to_text(q));
    });

    struct {
        std::string file;
    } vf;
    auto* vf_cmd =
        quandle_cmd->add_subcommand("verify", "check the axioms, reporting every violation");
    vf_cmd->add_option("file", vf.file, "quandle table file")->required();
    vf_cmd->callback([&] {
        auto [name, table] = read_quandle_table_file(vf.file);
        TableReport report = verify_table(table);
        if (report.valid()) {
            std::cout << "valid quandle " << name << " with " << table.rows() << " elements\n";
        } else {
            std::cout << report.describe() << "\n";
            soft_rc = 1;
        }
    });

    struct {
        std::string a, b;
    } iso;
    auto* iso_cmd = quandle_cmd->add_subcommand("iso", "search for an isomorphism");
    iso_cmd->add_option("first", iso.a, "quandle table file")->required();
    iso_cmd->add_option("second", iso.b, "quandle table file")->required();
    iso_cmd->callback([&] {
        FiniteQuandle x = read_quandle_file(iso.a);
        FiniteQuandle y = read_quandle_file(iso.b);
        if (auto images = find_isomorphism(x, y)) {
            std::cout << "isomorphic\n" << join_ints(*images) << "\n";
        } else {
            std::cout << "not isomorphic\n";
            soft_rc = 1;
        }
    });

    // ---- cohomology --------------------------------------------------------
    auto* coh_cmd = app.add_subcommand("cohomology", "cocycles, coboundaries and H2");
    coh_cmd->require_subcommand(1);

    struct {
        std::string quandle, cochain;
    } chk;
    auto* chk_cmd = coh_cmd->add_subcommand("check", "test the 2-cocycle condition");
    chk_cmd->add_option("quandle", chk.quandle, "quandle table file")->required();
    chk_cmd->add_option("cochain", chk.cochain, "cocycle file")->required();
    chk_cmd->callback([&] {
        FiniteQuandle q = read_quandle_file(chk.quandle);
        Cochain2 phi = read_cochain_file(chk.cochain, q);
        CocycleReport rep = is_cocycle2(q, phi);
        if (rep.ok) {
            std::cout << "cocycle\n";
        } else {
            std::cout << "not a cocycle: condition fails at (x, y, z) = (" << rep.x << ", "
                      << rep.y << ", " << rep.z << ")\n";
            soft_rc = 1;
        }
    });

    struct {
        std::string quandle, cochain;
        bool no_verify = false;
    } cob;
    auto* cob_cmd = coh_cmd->add_subcommand("coboundary", "decide whether the cochain is a coboundary");
    cob_cmd->add_option("quandle", cob.quandle, "quandle table file")->required();
    cob_cmd->add_option("cochain", cob.cochain, "cocycle file")->required();
    cob_cmd->add_flag("--no-verify", cob.no_verify, "skip cocycle validation and name binding on load");
    cob_cmd->callback([&] {
        FiniteQuandle q = read_quandle_file(cob.quandle);
        Cochain2 phi = load_cochain(cob.cochain, q, cob.no_verify);
        if (auto f = is_coboundary(q, phi)) {
            std::cout << "coboundary\n" << join_ints(*f) << "\n";
        } else {
            std::cout << "not a coboundary\n";
            soft_rc = 1;
        }
    });

    struct {
        std::string quandle, output;
        int modulus = 0;
    } h2o;
    auto* h2_cmd = coh_cmd->add_subcommand("h2", "second cohomology with Z_q coefficients");
    h2_cmd->add_option("quandle", h2o.quandle, "quandle table file")->required();
    h2_cmd->add_option("modulus", h2o.modulus, "coefficient modulus q >= 2")->required();
    h2_cmd->add_option("-o,--output", h2o.output, "write here instead of stdout");
    h2_cmd->callback([&] {
        FiniteQuandle q = read_quandle_file(h2o.quandle);
        H2Result h = compute_h2(q, h2o.modulus);
        std::ostringstream out;
        out << "H2(" << (q.label().empty() ? "Q" : q.label()) << "; Z" << h2o.modulus
            << ") = " << h.group_string() << "\n";
        for (size_t i = 0; i < h.orders.size(); ++i) {
            out << "generator " << i << " order " << h.orders[i] << "\n";
            const Cochain2& rep = h.representatives[i];
            for (int x = 0; x < rep.size(); ++x)
                for (int y = 0; y < rep.size(); ++y)
                    if (rep(x, y) != 0)
                        out << x << ' ' << y << ' ' << rep(x, y) << "\n";
        }
        emit(h2o.output, out.str());
    });

    struct {
        std::string quandle, cochain;
        std::vector<std::string> chain;
        bool no_verify = false, raw = false;
    } ev;
    auto* ev_cmd = coh_cmd->add_subcommand("eval", "pair a cochain with a 2-chain");
    ev_cmd->add_option("quandle", ev.quandle, "quandle table file")->required();
    ev_cmd->add_option("cochain", ev.cochain, "cocycle file")->required();
    ev_cmd->add_option("chain", ev.chain, "chain, e.g. '(0,1) + (2,1)' or '2*(0,1) - (3,4)'")
        ->required();
    ev_cmd->add_flag("--no-verify", ev.no_verify, "skip cocycle validation and name binding on load");
    ev_cmd->add_flag("--raw", ev.raw, "print the flat group element index");
    ev_cmd->callback([&] {
        FiniteQuandle q = read_quandle_file(ev.quandle);
        Cochain2 phi = load_cochain(ev.cochain, q, ev.no_verify);
        std::string text;
        for (const std::string& part : ev.chain) {
            if (!text.empty())
                text += ' ';
            text += part;
        }
        Chain2 chain = parse_chain2(text);
        if (!is_cycle2(q, chain))
            std::cerr << "note: the chain is not a cycle\n";
        int value = evaluate(phi, chain);
        if (ev.raw)
            std::cout << value << "\n";
        else
            std::cout << element_monomial(phi.group(), value) << "\n";
    });

    // ---- extend ------------------------------------------------------------
    auto* ext_cmd = app.add_subcommand("extend", "abelian extensions and cocycle families");
    ext_cmd->require_subcommand(1);

    struct {
        std::string quandle, cochain, output;
        bool no_verify = false;
    } bld;
    auto* bld_cmd = ext_cmd->add_subcommand("build", "total quandle of the abelian extension");
    bld_cmd->add_option("quandle", bld.quandle, "base quandle table file")->required();
    bld_cmd->add_option("cochain", bld.cochain, "cocycle file")->required();
    bld_cmd->add_option("-o,--output", bld.output, "write here instead of stdout");
    bld_cmd->add_flag("--no-verify", bld.no_verify,
                      "skip the name binding on load (the extension itself is always validated)");
    bld_cmd->callback([&] {
        FiniteQuandle q = read_quandle_file(bld.quandle);
        Cochain2 phi = read_cochain_file(bld.cochain, q, !bld.no_verify);
        AbelianExtension e = build_extension(q, phi);
        emit(bld.output, quandle_to_text(e.total));
    });

    struct {
        std::string total, base, fiber, output;
    } xt;
    auto* xt_cmd = ext_cmd->add_subcommand(
        "extract", "recover a defining cocycle from an extension written by 'extend build'");
    xt_cmd->add_option("total", xt.total, "extension quandle table file")->required();
    xt_cmd->add_option("base", xt.base, "base quandle table file")->required();
    xt_cmd->add_option("fiber", xt.fiber, "fiber group spec, e.g. Z2 or Z2xZ4")->required();
    xt_cmd->add_option("-o,--output", xt.output, "write here instead of stdout");
    xt_cmd->callback([&] {
        FiniteQuandle e = read_quandle_file(xt.total);
        FiniteQuandle x = read_quandle_file(xt.base);
        AbelianGroup a = AbelianGroup::parse(xt.fiber);
        if (e.size() != a.order() * x.size())
            throw MalformedInput("sizes do not match: need |total| = |fiber| * |base|, got " +
                                 std::to_string(e.size()) + " vs " + std::to_string(a.order()) +
                                 " * " + std::to_string(x.size()));
        std::vector<int> projection(e.size());
        for (int i = 0; i < e.size(); ++i)
            projection[i] = i % x.size();
        Cochain2 phi = extract_cocycle(e, x, a, projection);
        emit(xt.output, cochain_to_text(phi, x.label().empty() ? "Q" : x.label()));
    });

    struct FamilyOpts {
        int q = 0, m = 0;
        std::string output, quandle_out;
    };
    FamilyOpts t31, t32;
    auto* t31_cmd = ext_cmd->add_subcommand("thm31", "modular carry cocycle on Z_{q^m}");
    t31_cmd->add_option("q", t31.q, "modulus q >= 2")->required();
    t31_cmd->add_option("m", t31.m, "level m >= 1")->required();
    t31_cmd->add_option("-o,--output", t31.output, "write the cocycle here instead of stdout");
    t31_cmd->add_option("--quandle-out", t31.quandle_out, "also write the base quandle table here");
    t31_cmd->callback([&] {
        BasedCocycle bc = modular_carry_cocycle(t31.q, t31.m);
        if (!t31.quandle_out.empty())
            write_quandle_file(t31.quandle_out, bc.quandle);
        emit(t31.output, cochain_to_text(bc.cocycle, bc.quandle.label()));
    });

    auto* t32_cmd =
        ext_cmd->add_subcommand("thm32", "polynomial digit cocycle on Z_q[T]/(1-T)^m");
    t32_cmd->add_option("q", t32.q, "modulus q >= 2")->required();
    t32_cmd->add_option("m", t32.m, "level m >= 1")->required();
    t32_cmd->add_option("-o,--output", t32.output, "write the cocycle here instead of stdout");
    t32_cmd->add_option("--quandle-out", t32.quandle_out, "also write the base quandle table here");
    t32_cmd->callback([&] {
        BasedCocycle bc = polynomial_digit_cocycle(t32.q, t32.m);
        if (!t32.quandle_out.empty())
            write_quandle_file(t32.quandle_out, bc.quandle);
        emit(t32.output, cochain_to_text(bc.cocycle, bc.quandle.label()));
    });

    struct {
        int n = 0;
        std::string output, quandle_out;
    } dblo;
    auto* dbl_cmd =
        ext_cmd->add_subcommand("doubling", "cocycle on R_{2n} whose extension is R_{4n}");
    dbl_cmd->add_option("n", dblo.n, "half the dihedral order, n >= 1")->required();
    dbl_cmd->add_option("-o,--output", dblo.output, "write the cocycle here instead of stdout");
    dbl_cmd->add_option("--quandle-out", dblo.quandle_out, "also write the base quandle table here");
    dbl_cmd->callback([&] {
        BasedCocycle bc = dihedral_doubling_cocycle(dblo.n);
        if (!dblo.quandle_out.empty())
            write_quandle_file(dblo.quandle_out, bc.quandle);
        emit(dblo.output, cochain_to_text(bc.cocycle, bc.quandle.label()));
    });

    struct {
        int n = 0;
    } crt;
    auto* crt_cmd = ext_cmd->add_subcommand("crt", "split R_n into prime power dihedral factors");
    crt_cmd->add_option("n", crt.n, "dihedral order n >= 1")->required();
    crt_cmd->callback([&] {
        DihedralSplitting s = crt_decompose_dihedral(crt.n);
        std::cout << "R" << crt.n << " = ";
        for (size_t i = 0; i < s.moduli.size(); ++i)
            std::cout << (i ? " x R" : "R") << s.moduli[i];
        std::cout << "\n" << join_ints(s.iso.images) << "\n";
    });

    // ---- color -------------------------------------------------------------
    auto* col_cmd = app.add_subcommand("color", "quandle colorings of link diagrams");
    col_cmd->require_subcommand(1);

    struct {
        std::string diagram, quandle;
    } cnt;
    auto* cnt_cmd = col_cmd->add_subcommand("count", "number of colorings");
    cnt_cmd->add_option("diagram", cnt.diagram, "link diagram file")->required();
    cnt_cmd->add_option("quandle", cnt.quandle, "quandle table file")->required();
    cnt_cmd->callback([&] {
        std::cout << count_colorings(read_diagram_file(cnt.diagram),
                                     read_quandle_file(cnt.quandle))
                  << "\n";
    });

    struct {
        std::string diagram, quandle;
    } lst;
    auto* lst_cmd = col_cmd->add_subcommand("list", "all colorings, one arc-color row each");
    lst_cmd->add_option("diagram", lst.diagram, "link diagram file")->required();
    lst_cmd->add_option("quandle", lst.quandle, "quandle table file")->required();
    lst_cmd->callback([&] {
        LinkDiagram d = read_diagram_file(lst.diagram);
        FiniteQuandle q = read_quandle_file(lst.quandle);
        for (const Coloring& c : enumerate_colorings(d, q))
            std::cout << join_ints(c.colors) << "\n";
    });

    struct {
        std::string diagram, quandle, cochain, fibers;
        bool no_verify = false;
    } lf;
    auto* lf_cmd = col_cmd->add_subcommand("lift", "lift colorings through the abelian extension");
    lf_cmd->add_option("diagram", lf.diagram, "link diagram file")->required();
    lf_cmd->add_option("quandle", lf.quandle, "quandle table file")->required();
    lf_cmd->add_option("cochain", lf.cochain, "cocycle file")->required();
    lf_cmd->add_option("--fibers", lf.fibers, "starting fiber per component, e.g. 0,1");
    lf_cmd->add_flag("--no-verify", lf.no_verify, "skip cocycle validation and name binding on load");
    lf_cmd->callback([&] {
        LinkDiagram d = read_diagram_file(lf.diagram);
        FiniteQuandle q = read_quandle_file(lf.quandle);
        Cochain2 phi = load_cochain(lf.cochain, q, lf.no_verify);
        AbelianExtension ext = build_extension(q, phi);
        std::vector<int> fibers;
        if (!lf.fibers.empty())
            fibers = to_int_list(lf.fibers, "--fibers");
        long long total = 0, lifted = 0;
        for (const Coloring& c : enumerate_colorings(d, q)) {
            LiftOutcome out = lift_coloring(d, ext, c, fibers);
            std::cout << join_ints(c.colors);
            if (out.ok) {
                std::cout << " -> " << join_ints(out.lifted.colors) << "\n";
                ++lifted;
            } else {
                std::cout << " obstructed " << join_ints(out.component_holonomy) << "\n";
            }
            ++total;
        }
        std::cout << "extendable " << lifted << " of " << total << "\n";
    });

    // ---- invariant ---------------------------------------------------------
    auto* inv_cmd = app.add_subcommand("invariant", "cocycle state-sum invariants");
    inv_cmd->require_subcommand(1);

    struct InvOpts {
        std::string diagram, quandle, cochain;
        bool no_verify = false, raw = false;
    };
    InvOpts ss, cw, ob;

    auto add_inv_options = [](CLI::App* cmd, InvOpts& o) {
        cmd->add_option("diagram", o.diagram, "link diagram file")->required();
        cmd->add_option("quandle", o.quandle, "quandle table file")->required();
        cmd->add_option("cochain", o.cochain, "cocycle file")->required();
        cmd->add_flag("--no-verify", o.no_verify, "skip cocycle validation and name binding on load");
        cmd->add_flag("--raw", o.raw, "machine readable lines instead of polynomials");
    };

    auto* ss_cmd = inv_cmd->add_subcommand("state-sum", "the cocycle state-sum of the diagram");
    add_inv_options(ss_cmd, ss);
    ss_cmd->callback([&] {
        LinkDiagram d = read_diagram_file(ss.diagram);
        FiniteQuandle q = read_quandle_file(ss.quandle);
        Cochain2 phi = load_cochain(ss.cochain, q, ss.no_verify);
        GroupRingValue v = state_sum(d, q, phi, false); // validated on load
        if (ss.raw) {
            for (const auto& [elem, count] : v.terms())
                std::cout << elem << ' ' << count << "\n";
        } else {
            std::cout << v.str() << "\n";
        }
    });

    auto* cw_cmd = inv_cmd->add_subcommand("components", "per-component state-sum vector");
    add_inv_options(cw_cmd, cw);
    cw_cmd->callback([&] {
        LinkDiagram d = read_diagram_file(cw.diagram);
        FiniteQuandle q = read_quandle_file(cw.quandle);
        Cochain2 phi = load_cochain(cw.cochain, q, cw.no_verify);
        std::vector<GroupRingValue> parts = componentwise_state_sum(d, q, phi, false);
        if (cw.raw) {
            for (size_t i = 0; i < parts.size(); ++i)
                for (const auto& [elem, count] : parts[i].terms())
                    std::cout << i << ' ' << elem << ' ' << count << "\n";
        } else {
            std::cout << '(';
            for (size_t i = 0; i < parts.size(); ++i)
                std::cout << (i ? ", " : "") << parts[i].str();
            std::cout << ")\n";
        }
    });

    auto* ob_cmd = inv_cmd->add_subcommand("obstruction",
                                           "which colorings extend through the extension");
    add_inv_options(ob_cmd, ob);
    ob_cmd->callback([&] {
        LinkDiagram d = read_diagram_file(ob.diagram);
        FiniteQuandle q = read_quandle_file(ob.quandle);
        Cochain2 phi = load_cochain(ob.cochain, q, ob.no_verify);
        ObstructionReport rep = obstruction_report(d, q, phi, false);
        std::cout << "colorings " << rep.coloring_count << "\n";
        std::cout << "extendable " << rep.extendable_count << "\n";
        std::cout << "state-sum " << rep.total.str() << "\n";
        std::cout << "components (";
        for (size_t i = 0; i < rep.per_component.size(); ++i)
            std::cout << (i ? ", " : "") << rep.per_component[i].str();
        std::cout << ")\n";
        if (ob.raw) {
            for (size_t i = 0; i < rep.colorings.size(); ++i)
                std::cout << join_ints(rep.colorings[i].colors) << " holonomy "
                          << join_ints(rep.holonomy_table[i]) << "\n";
        }
    });

    // ---- paper-suite -------------------------------------------------------
    struct {
        std::string data;
    } ps;
    auto* ps_cmd = app.add_subcommand("paper-suite", "re-run the worked examples and golden values");
    ps_cmd->add_option("--data", ps.data, "data directory (default: bundled, or $QUANDLEKIT_DATA)");
    ps_cmd->callback([&] { soft_rc = run_paper_suite(ps.data); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return soft_rc;
}
